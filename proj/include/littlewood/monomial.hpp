#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "littlewood/vars.hpp"

namespace littlewood {

// Exponent vector over the fixed registry. Negative exponents are legal for
// the X-variables and for Q; the arithmetic layer enforces where they may
// actually arise. Comparison is lexicographic in registry order, which is the
// canonical term order for serialization and first-mismatch reporting.
struct Monomial {
  std::array<int16_t, kNumVars> e{};

  auto operator<=>(const Monomial&) const = default;

  int exp(int v) const { return e[static_cast<size_t>(v)]; }
  void set(int v, int k) { e[static_cast<size_t>(v)] = static_cast<int16_t>(k); }

  bool is_one() const {
    for (int16_t x : e)
      if (x != 0) return false;
    return true;
  }

  // Total degree in the X-variables only.
  int x_degree() const {
    int d = 0;
    for (int i = 0; i < kMaxX; ++i) d += e[static_cast<size_t>(i)];
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (int16_t x : e) d += x;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (size_t i = 0; i < kNumVars; ++i)
      m.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return m;
  }

  Monomial operator/(const Monomial& o) const {
    Monomial m;
    for (size_t i = 0; i < kNumVars; ++i)
      m.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return m;
  }

  Monomial inverse() const {
    Monomial m;
    for (size_t i = 0; i < kNumVars; ++i) m.e[i] = static_cast<int16_t>(-e[i]);
    return m;
  }

  static Monomial one() { return Monomial{}; }

  static Monomial of(int v, int k = 1) {
    Monomial m;
    m.set(v, k);
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
      int k = exp(v);
      if (k == 0) continue;
      if (!s.empty()) s += "*";
      s += var_name(v);
      if (k != 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    // FNV-1a over the raw exponent words.
    size_t h = 1469598103934665603ull;
    for (int16_t x : m.e) {
      h ^= static_cast<size_t>(static_cast<uint16_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace littlewood
