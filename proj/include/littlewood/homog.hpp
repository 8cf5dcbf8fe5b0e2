#pragma once

#include <gmpxx.h>

#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/laurent.hpp"

namespace littlewood {

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

inline int sign_of(long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Complete homogeneous polynomial h_k over an arbitrary argument list, with
// the negative-index extension: h_k = 0 for -n+1 <= k <= -1 and
//   h_k(a_1..a_n) = (-1)^{n+1} (a_1...a_n)^{-1} h_{-k-n}(a_1^{-1}..a_n^{-1})
// for k <= -n. The reciprocal branch requires invertible monomial arguments.
inline LaurentPoly complete_homog(long k, const std::vector<LaurentPoly>& args) {
  if (args.empty()) throw PreconditionViolated("complete_homog needs arguments");
  const long n = static_cast<long>(args.size());
  if (k < 0) {
    if (k >= -n + 1) return LaurentPoly();
    std::vector<LaurentPoly> inv;
    inv.reserve(args.size());
    LaurentPoly prefix(1);
    for (const auto& a : args) {
      if (!a.is_unit_monomial())
        throw NonInvertibleArgument("negative-index h needs invertible monomial arguments");
      inv.push_back(a.unit_inverse());
      prefix *= inv.back();
    }
    LaurentPoly h = complete_homog(-k - n, inv);
    LaurentPoly result = prefix * h;
    return (n % 2 == 0) ? -result : result;
  }
  std::vector<LaurentPoly> h(static_cast<size_t>(k) + 1);
  h[0] = LaurentPoly(1);
  for (const auto& a : args)
    for (long d = 1; d <= k; ++d) h[static_cast<size_t>(d)] += a * h[static_cast<size_t>(d - 1)];
  return h[static_cast<size_t>(k)];
}

// h_k(X_1, X_1^-1, ..., X_i, X_i^-1), the lattice-path alphabet of the
// right-hand-side interpretation.
inline LaurentPoly complete_homog_pm(long k, int i) {
  std::vector<LaurentPoly> args;
  for (int j = 1; j <= i; ++j) {
    args.push_back(xvar(j));
    args.push_back(xvar_pow(j, -1));
  }
  return complete_homog(k, args);
}

}  // namespace littlewood
