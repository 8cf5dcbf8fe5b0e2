#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace littlewood {

// Fixed variable registry: X1..X8 followed by the parameters t,u,v,w,Q,r.
// All polynomials in the library live over this one registry; the ordering
// below is also the canonical ordering used for serialization.
inline constexpr int kMaxX = 8;
inline constexpr int kNumVars = kMaxX + 6;

namespace var {
inline constexpr int X1 = 0;
inline constexpr int t = kMaxX + 0;
inline constexpr int u = kMaxX + 1;
inline constexpr int v = kMaxX + 2;
inline constexpr int w = kMaxX + 3;
inline constexpr int Q = kMaxX + 4;
inline constexpr int r = kMaxX + 5;

// X_i with 1-based i, as used throughout the formulas.
inline constexpr int X(int i) { return X1 + (i - 1); }
}  // namespace var

inline bool is_x_var(int id) { return id >= 0 && id < kMaxX; }

inline std::string var_name(int id) {
  static const std::array<const char*, 6> params = {"t", "u", "v", "w", "Q", "r"};
  if (is_x_var(id)) return "X" + std::to_string(id + 1);
  if (id >= kMaxX && id < kNumVars) return params[id - kMaxX];
  throw std::out_of_range("variable id out of registry");
}

inline int var_from_name(std::string_view name) {
  if (name.size() >= 2 && name[0] == 'X') {
    int i = std::stoi(std::string(name.substr(1)));
    if (i >= 1 && i <= kMaxX) return var::X(i);
  }
  if (name == "t") return var::t;
  if (name == "u") return var::u;
  if (name == "v") return var::v;
  if (name == "w") return var::w;
  if (name == "Q") return var::Q;
  if (name == "r") return var::r;
  throw std::invalid_argument("unknown variable name: " + std::string(name));
}

}  // namespace littlewood
