#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "littlewood/laurent.hpp"

namespace littlewood {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Relabel variables according to a full registry map (old id -> new id).
inline LaurentPoly relabel_vars(const LaurentPoly& f, const std::array<int, kNumVars>& to) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm;
    for (int v = 0; v < kNumVars; ++v) {
      int k = m.exp(v);
      if (k != 0) mm.set(to[static_cast<size_t>(v)], mm.exp(to[static_cast<size_t>(v)]) + k);
    }
    out.add_term(mm, c);
  }
  return out;
}

namespace detail {
inline std::array<int, kNumVars> identity_map() {
  std::array<int, kNumVars> a{};
  for (int i = 0; i < kNumVars; ++i) a[static_cast<size_t>(i)] = i;
  return a;
}
}  // namespace detail

// Signed/unsigned permutation sums over an ordered set of X-variables
// (1-based indices). The input is expanded once; permutations act by
// exponent relabelling.
inline LaurentPoly asym(const LaurentPoly& f, const std::vector<int>& xs) {
  if (xs.empty()) throw std::invalid_argument("asym over empty variable set");
  LaurentPoly out;
  for (const auto& perm : permutations_of(static_cast<int>(xs.size()))) {
    auto to = detail::identity_map();
    for (size_t i = 0; i < xs.size(); ++i)
      to[static_cast<size_t>(var::X(xs[i]))] = var::X(xs[static_cast<size_t>(perm[i])]);
    LaurentPoly g = relabel_vars(f, to);
    if (permutation_sign(perm) > 0)
      out += g;
    else
      out -= g;
  }
  return out;
}

inline LaurentPoly sym(const LaurentPoly& f, const std::vector<int>& xs) {
  if (xs.empty()) throw std::invalid_argument("sym over empty variable set");
  LaurentPoly out;
  for (const auto& perm : permutations_of(static_cast<int>(xs.size()))) {
    auto to = detail::identity_map();
    for (size_t i = 0; i < xs.size(); ++i)
      to[static_cast<size_t>(var::X(xs[i]))] = var::X(xs[static_cast<size_t>(perm[i])]);
    out += relabel_vars(f, to);
  }
  return out;
}

inline std::vector<int> first_n_xs(int n) {
  std::vector<int> xs(static_cast<size_t>(n));
  std::iota(xs.begin(), xs.end(), 1);
  return xs;
}

inline LaurentPoly asym(const LaurentPoly& f, int n) { return asym(f, first_n_xs(n)); }
inline LaurentPoly sym(const LaurentPoly& f, int n) { return sym(f, first_n_xs(n)); }

// prod_{1 <= i < j <= n} (X_j - X_i)
inline LaurentPoly vandermonde(int n) {
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p *= xvar(j) - xvar(i);
  return p;
}

// prod_{1 <= i < j <= n} (X_i - X_j) = (-1)^{C(n,2)} vandermonde(n)
inline LaurentPoly vandermonde_descending(int n) {
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p *= xvar(i) - xvar(j);
  return p;
}

inline constexpr int kDetSizeBound = 8;

// Cofactor expansion with bitmask memoization over column subsets;
// 2^n subproblems, exact on this ring.
inline LaurentPoly det(const PolyMatrix& m, int size_bound = kDetSizeBound) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  if (n > size_bound) throw std::invalid_argument("matrix exceeds determinant size bound");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant of non-square matrix");
  std::vector<LaurentPoly> memo(static_cast<size_t>(1) << n);
  memo[0] = LaurentPoly(1);
  for (unsigned mask = 1; mask < memo.size(); ++mask) {
    const int row = std::popcount(mask) - 1;
    LaurentPoly acc;
    int parity = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const LaurentPoly& e = m[static_cast<size_t>(row)][static_cast<size_t>(j)];
      if (!e.is_zero()) {
        LaurentPoly sub = e * memo[mask ^ (1u << j)];
        if ((row + parity) % 2 == 0)
          acc += sub;
        else
          acc -= sub;
      }
      ++parity;
    }
    memo[mask] = std::move(acc);
  }
  return memo.back();
}

// Independent determinant route used by tests: straight permutation sum.
inline LaurentPoly det_by_permutations(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  LaurentPoly acc;
  for (const auto& perm : permutations_of(n)) {
    LaurentPoly prod(1);
    for (int i = 0; i < n; ++i) prod *= m[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
    if (permutation_sign(perm) > 0)
      acc += prod;
    else
      acc -= prod;
  }
  return acc;
}

}  // namespace littlewood
