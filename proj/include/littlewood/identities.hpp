#pragma once

#include <string>
#include <vector>

#include "littlewood/agtp.hpp"
#include "littlewood/homog.hpp"
#include "littlewood/report.hpp"
#include "littlewood/schur.hpp"
#include "littlewood/series.hpp"
#include "littlewood/symmetric.hpp"

namespace littlewood {

namespace qv {
inline LaurentPoly Q() { return LaurentPoly::variable(var::Q); }
inline LaurentPoly R() { return LaurentPoly::variable(var::r); }
inline LaurentPoly W() { return LaurentPoly::variable(var::w); }
}  // namespace qv

enum class APerturb { None, FlipFirst, FlipSecond };

// Matrix entry of the bounded (Q,r)-identity with the row denominator
// (Q+X)^m cleared; Q^-n stays as a Laurent factor. The perturbation hook
// flips one of the two term signs (used by the failure-reporting self-test).
inline LaurentPoly a_entry_cleared(int j, int m, int n, int xi, APerturb perturb = APerturb::None) {
  const LaurentPoly X = xvar(xi), Xi = xvar_pow(xi, -1);
  const LaurentPoly Q = qv::Q(), r = qv::R();
  LaurentPoly term1 = (LaurentPoly(1) + Q * Xi) * X.pow(static_cast<unsigned long>(j)) *
                      (LaurentPoly(1) + X).pow(static_cast<unsigned long>(j - 1)) *
                      (Q + r * X + Q * X).pow(static_cast<unsigned long>(n - j)) *
                      (Q + X).pow(static_cast<unsigned long>(m));
  LaurentPoly term2 = xvar_pow(xi, 2 * n) * LaurentPoly::variable(var::Q, -n) *
                      ((LaurentPoly(1) + X) * X).pow(static_cast<unsigned long>(m)) *
                      (LaurentPoly(1) + X) * (Q * Xi).pow(static_cast<unsigned long>(j)) *
                      (LaurentPoly(1) + Q * Xi).pow(static_cast<unsigned long>(j - 1)) *
                      (Q + r * Q * Xi + Q * Q * Xi).pow(static_cast<unsigned long>(n - j));
  if (perturb == APerturb::FlipFirst) term1 = -term1;
  if (perturb == APerturb::FlipSecond) term2 = -term2;
  return term1 - term2;
}

namespace detail {

// Sum over 0 <= k_1 < ... < k_n <= m of prod_i A_i^{k_i} B_i^{m-k_i}.
inline LaurentPoly bounded_ksum_general(int n, int m,
                                        const std::vector<LaurentPoly>& A,
                                        const std::vector<LaurentPoly>& B) {
  std::vector<std::vector<LaurentPoly>> tableA(static_cast<size_t>(n)),
      tableB(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    tableA[static_cast<size_t>(i)].resize(static_cast<size_t>(m) + 1);
    tableB[static_cast<size_t>(i)].resize(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      tableA[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          A[static_cast<size_t>(i)].pow(static_cast<unsigned long>(k));
      tableB[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          B[static_cast<size_t>(i)].pow(static_cast<unsigned long>(k));
    }
  }
  LaurentPoly acc;
  auto rec = [&](auto&& self, int pos, int low, const LaurentPoly& prefix) -> void {
    if (pos == n) {
      acc += prefix;
      return;
    }
    for (int k = low; k <= m; ++k) {
      LaurentPoly next = prefix * tableA[static_cast<size_t>(pos)][static_cast<size_t>(k)] *
                         tableB[static_cast<size_t>(pos)][static_cast<size_t>(m - k)];
      self(self, pos + 1, k + 1, next);
    }
  };
  rec(rec, 0, 0, LaurentPoly(1));
  return acc;
}

inline LaurentPoly boundedrQ_lhs_numerator(int n, int m) {
  LaurentPoly P(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      P *= qv::Q() + (qv::Q() + qv::R()) * xvar(i) + xvar(j) + xvar(i) * xvar(j);
  std::vector<LaurentPoly> A, B;
  for (int i = 1; i <= n; ++i) {
    A.push_back(xvar(i) * (LaurentPoly(1) + xvar(i)));
    B.push_back(qv::Q() + xvar(i));
  }
  return asym(P * bounded_ksum_general(n, m, A, B), n);
}

inline LaurentPoly boundedrQ_rhs_det(int n, int m, APerturb perturb = APerturb::None) {
  PolyMatrix M(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          a_entry_cleared(j, m, n, i, perturb);
  return det(M);
}

// prod over 1 <= i <= j <= n of (Q - X_i X_j)
inline LaurentPoly q_pair_product(int n) {
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) p *= qv::Q() - xvar(i) * xvar(j);
  return p;
}

inline LaurentPoly entry8(int i, int j, int n, int m) {
  const LaurentPoly X = xvar(i), Xi = xvar_pow(i, -1), w = qv::W();
  LaurentPoly first = xvar_pow(i, j - 1) *
                      (LaurentPoly(1) + X).pow(static_cast<unsigned long>(j - 1)) *
                      (LaurentPoly(1) + w * X).pow(static_cast<unsigned long>(n - j));
  LaurentPoly second = xvar_pow(i, m + 2 * n - j) *
                       (LaurentPoly(1) + Xi).pow(static_cast<unsigned long>(j - 1)) *
                       (LaurentPoly(1) + w * Xi).pow(static_cast<unsigned long>(n - j));
  return first - second;
}

inline LaurentPoly rincluded_denominator(int n) {
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i) p *= LaurentPoly(1) - xvar(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p *= LaurentPoly(1) - xvar(i) * xvar(j);
  return p;
}

inline Series series_asym(const Series& inner, int n) {
  Series acc = Series::from_poly(LaurentPoly(0), inner.cap());
  for (const auto& perm : permutations_of(n)) {
    auto to = detail::identity_map();
    for (int i = 0; i < n; ++i)
      to[static_cast<size_t>(var::X(i + 1))] = var::X(perm[static_cast<size_t>(i)] + 1);
    Series g = Series::from_poly(relabel_vars(inner.poly(), to), inner.cap());
    if (permutation_sign(perm) > 0)
      acc += g;
    else
      acc -= g;
  }
  return acc;
}

}  // namespace detail

// Theorem-level identity: LHS numerator times prod_{i<=j}(Q-X_iX_j) equals
// the determinant of the cleared entries, fully symbolic in Q and r.
inline IdentityReport verify_boundedrQ(int n, int m, APerturb perturb = APerturb::None) {
  ReportTimer timer;
  LaurentPoly lhs = detail::boundedrQ_lhs_numerator(n, m) * detail::q_pair_product(n);
  LaurentPoly rhs = detail::boundedrQ_rhs_det(n, m, perturb);
  return compare_exact("boundedrQ",
                       {{"n", std::to_string(n)}, {"m", std::to_string(m)}}, lhs, rhs,
                       timer);
}

enum class RincludedForm { Corollary, Normalized };

// Corollary form: the w-deformed bounded identity, plus the Q=1, r=w-1
// substitution chain back to the theorem. Normalized form carries the
// diagonal factors and the X^{k-1} shift.
inline IdentityReport verify_rincluded(int n, int m,
                                       RincludedForm form = RincludedForm::Corollary) {
  ReportTimer timer;
  const LaurentPoly w = qv::W();
  PolyMatrix M(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = detail::entry8(i, j, n, m);
  LaurentPoly B = det(M);
  const std::string id = form == RincludedForm::Corollary ? "rincluded" : "rincluded1";
  ParamList params{{"n", std::to_string(n)}, {"m", std::to_string(m)}};

  if (form == RincludedForm::Normalized) {
    LaurentPoly prod(1);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        prod *= LaurentPoly(1) + w * xvar(i) + xvar(j) + xvar(i) * xvar(j);
    LaurentPoly A1 = asym(prod * bounded_ksum(n, m, -1), n);
    LaurentPoly lr(1);
    for (int i = 1; i <= n; ++i) lr *= xvar_pow(i, -1) + 1 + w + xvar(i);
    return compare_exact(id, params, A1 * detail::rincluded_denominator(n), lr * B, timer);
  }

  LaurentPoly prod(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      prod *= LaurentPoly(1) + w * xvar(i) + xvar(j) + xvar(i) * xvar(j);
  LaurentPoly A = asym(prod * bounded_ksum(n, m, 0), n);
  IdentityReport rep =
      compare_exact(id, params, A * detail::rincluded_denominator(n), B, timer);
  if (!rep.verified) return rep;

  // Substitution chain: Q=1, r=w-1 specializes the theorem's two sides onto
  // (1+X_i)-multiples of this identity's two sides.
  std::map<int, LaurentPoly> bind{{var::Q, LaurentPoly(1)}, {var::r, w - LaurentPoly(1)}};
  LaurentPoly ones_m(1), ones_m1(1);
  for (int i = 1; i <= n; ++i) {
    ones_m *= (LaurentPoly(1) + xvar(i)).pow(static_cast<unsigned long>(m));
    ones_m1 *= (LaurentPoly(1) + xvar(i)).pow(static_cast<unsigned long>(m + 1));
  }
  LaurentPoly TL = detail::boundedrQ_lhs_numerator(n, m).substitute(bind);
  if (TL != ones_m * A) {
    IdentityReport bad = compare_exact(id, params, TL, ones_m * A, timer);
    bad.params.emplace_back("stage", "substitution-chain-lhs");
    return bad;
  }
  LaurentPoly TR = detail::boundedrQ_rhs_det(n, m).substitute(bind);
  if (TR != ones_m1 * B) {
    IdentityReport bad = compare_exact(id, params, TR, ones_m1 * B, timer);
    bad.params.emplace_back("stage", "substitution-chain-rhs");
    return bad;
  }
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

// Bounded classical Littlewood: sum of Schur polynomials over lambda inside
// the m x n box against the two-term determinant.
inline IdentityReport verify_macdonald(int n, int m) {
  ReportTimer timer;
  LaurentPoly sum;
  std::vector<long> lambda(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long hi) -> void {
    if (pos == n) {
      sum += schur_bialternant(lambda);
      return;
    }
    for (long x = 0; x <= hi; ++x) {
      lambda[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, x);
    }
  };
  rec(rec, 0, m);

  LaurentPoly clear(1);
  for (int i = 1; i <= n; ++i) clear *= LaurentPoly(1) - xvar(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      clear *= (xvar(j) - xvar(i)) * (LaurentPoly(1) - xvar(i) * xvar(j));

  PolyMatrix M(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          xvar_pow(i, j - 1) - xvar_pow(i, m + 2 * n - j);
  return compare_exact("macdonald", {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                       sum * clear, det(M), timer);
}

enum class UnboundedVariant { Eq1, Eq2, Eq3, Eq4, Eq5 };

inline const char* unbounded_name(UnboundedVariant v) {
  switch (v) {
    case UnboundedVariant::Eq1: return "eq1";
    case UnboundedVariant::Eq2: return "eq2";
    case UnboundedVariant::Eq3: return "eq3";
    case UnboundedVariant::Eq4: return "eq4";
    case UnboundedVariant::Eq5: return "eq5";
  }
  return "?";
}

namespace detail {

inline LaurentPoly unbounded_pair_factor(UnboundedVariant v, int i, int j) {
  switch (v) {
    case UnboundedVariant::Eq1:
      return LaurentPoly(1);
    case UnboundedVariant::Eq2:
      return LaurentPoly(1) + xvar(j) + xvar(i) * xvar(j);
    case UnboundedVariant::Eq3:
      return qv::Q() + (qv::Q() - LaurentPoly(1)) * xvar(i) + xvar(j) + xvar(i) * xvar(j);
    case UnboundedVariant::Eq4:
      return LaurentPoly(1) + qv::W() * xvar(i) + xvar(j) + xvar(i) * xvar(j);
    case UnboundedVariant::Eq5:
      return qv::Q() + (qv::Q() + qv::R()) * xvar(i) + xvar(j) + xvar(i) * xvar(j);
  }
  return LaurentPoly(1);
}

inline bool unbounded_uses_q(UnboundedVariant v) {
  return v == UnboundedVariant::Eq3 || v == UnboundedVariant::Eq5;
}

// ASym[ prod factors * sum_k prod u(X_i)^{k_i} ] as a series, k-sum truncated
// at sum k_i <= cap (each summand has X-degree >= sum k_i, so this is exact
// modulo the cap).
inline Series unbounded_lhs(UnboundedVariant v, int n, int cap) {
  LaurentPoly P(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) P *= unbounded_pair_factor(v, i, j);
  Series inner = Series::from_poly(P, cap);

  std::vector<std::vector<Series>> upow(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Series base =
        unbounded_uses_q(v)
            ? Series::from_poly(xvar(i) * (LaurentPoly(1) + xvar(i)), cap) *
                  expand_inverse_factor(qv::Q() + xvar(i), cap)
            : Series::from_poly(xvar(i), cap);
    auto& row = upow[static_cast<size_t>(i - 1)];
    row.push_back(Series::from_poly(LaurentPoly(1), cap));
    for (int k = 1; k <= cap; ++k) row.push_back(row.back() * base);
  }

  Series ksum = Series::from_poly(LaurentPoly(0), cap);
  std::vector<int> k(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int pos, int low, int budget, const Series& prefix) -> void {
    if (pos == n) {
      ksum += prefix;
      return;
    }
    for (int x = low; x <= budget; ++x) {
      self(self, pos + 1, x + 1, budget - x,
           prefix * upow[static_cast<size_t>(pos)][static_cast<size_t>(x)]);
    }
  };
  rec(rec, 0, 0, cap, Series::from_poly(LaurentPoly(1), cap));

  return series_asym(inner * ksum, n);
}

inline Series unbounded_rhs_times_vandermonde(UnboundedVariant v, int n, int cap) {
  std::vector<LaurentPoly> nums, dens;
  nums.push_back(vandermonde(n));
  switch (v) {
    case UnboundedVariant::Eq1:
      for (int i = 1; i <= n; ++i) dens.push_back(LaurentPoly(1) - xvar(i));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) dens.push_back(LaurentPoly(1) - xvar(i) * xvar(j));
      break;
    case UnboundedVariant::Eq2:
    case UnboundedVariant::Eq4:
      for (int i = 1; i <= n; ++i) dens.push_back(LaurentPoly(1) - xvar(i));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          LaurentPoly t = LaurentPoly(1) + xvar(i) + xvar(j);
          if (v == UnboundedVariant::Eq4) t += qv::W() * xvar(i) * xvar(j);
          nums.push_back(t);
          dens.push_back(LaurentPoly(1) - xvar(i) * xvar(j));
        }
      break;
    case UnboundedVariant::Eq3:
    case UnboundedVariant::Eq5:
      for (int i = 1; i <= n; ++i) {
        nums.push_back(qv::Q() + xvar(i));
        dens.push_back(qv::Q() - xvar(i) * xvar(i));
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          LaurentPoly ones = qv::Q() * (LaurentPoly(1) + xvar(i)) * (LaurentPoly(1) + xvar(j));
          if (v == UnboundedVariant::Eq3)
            nums.push_back(ones - xvar(i) * xvar(j));
          else
            nums.push_back(ones + qv::R() * xvar(i) * xvar(j));
          dens.push_back(qv::Q() - xvar(i) * xvar(j));
        }
      break;
  }
  return series_expand(nums, dens, cap);
}

}  // namespace detail

// The unbounded Littlewood-type identities, checked as truncated formal
// power series (numerators cross-multiplied by the Vandermonde product).
inline IdentityReport verify_unbounded(UnboundedVariant v, int n, int cap) {
  ReportTimer timer;
  Series lhs =
      v == UnboundedVariant::Eq1
          ? [&] {
              // sum of Schur polynomials over all partitions of weight <= cap
              LaurentPoly sum;
              std::vector<long> lambda(static_cast<size_t>(n), 0);
              auto rec = [&](auto&& self, int pos, long hi, long budget) -> void {
                if (pos == n) {
                  sum += schur_bialternant(lambda);
                  return;
                }
                for (long x = 0; x <= std::min<long>(hi, budget); ++x) {
                  lambda[static_cast<size_t>(pos)] = x;
                  self(self, pos + 1, x, budget - x);
                }
              };
              rec(rec, 0, cap, cap);
              return Series::from_poly(sum * vandermonde(n), cap);
            }()
          : detail::unbounded_lhs(v, n, cap);
  Series rhs = detail::unbounded_rhs_times_vandermonde(v, n, cap);
  return compare_series(unbounded_name(v),
                        {{"n", std::to_string(n)}, {"degree", std::to_string(cap)}}, lhs,
                        rhs, cap, timer);
}

// The m -> infinity identity, both sides as truncated series with
// Laurent-in-Q coefficients, symbolic in r.
inline IdentityReport verify_infinite(int n, int cap) {
  ReportTimer timer;
  std::vector<Series> u;  // X_i(1+X_i)/(Q+X_i)
  for (int i = 1; i <= n; ++i)
    u.push_back(Series::from_poly(xvar(i) * (LaurentPoly(1) + xvar(i)), cap) *
                expand_inverse_factor(qv::Q() + xvar(i), cap));

  LaurentPoly P(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      P *= qv::Q() + (qv::Q() + qv::R()) * xvar(i) + xvar(j) + xvar(i) * xvar(j);
  Series inner = Series::from_poly(P, cap);
  for (int i = 1; i <= n; ++i)
    inner *= u[static_cast<size_t>(i - 1)].pow(static_cast<unsigned long>(i - 1), cap);
  for (int i = 1; i <= n; ++i) {
    Series mu = Series::from_poly(LaurentPoly(1), cap);
    for (int j = i; j <= n; ++j) mu *= u[static_cast<size_t>(j - 1)];
    inner *= geometric_inverse(mu);
  }
  Series lhs = detail::series_asym(inner, n);

  std::vector<LaurentPoly> nums, dens;
  for (int i = 1; i <= n; ++i) {
    nums.push_back(qv::Q() + xvar(i));
    dens.push_back(qv::Q() - xvar(i) * xvar(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      nums.push_back(xvar(j) - xvar(i));
      nums.push_back(qv::Q() * (LaurentPoly(1) + xvar(i)) * (LaurentPoly(1) + xvar(j)) +
                     qv::R() * xvar(i) * xvar(j));
      dens.push_back(qv::Q() - xvar(i) * xvar(j));
    }
  Series rhs = series_expand(nums, dens, cap);
  return compare_series("infinite", {{"n", std::to_string(n)}, {"degree", std::to_string(cap)}},
                        lhs, rhs, cap, timer);
}

// The polynomial identity behind the recursion: each summand's denominator
// factors are cancelled symbolically via exact division.
inline IdentityReport verify_leftright(int n) {
  ReportTimer timer;
  const LaurentPoly Q = qv::Q(), r = qv::R();
  LaurentPoly pref(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      pref *= (xvar(j) - xvar(i)) *
              (Q * (LaurentPoly(1) + xvar(i)) * (LaurentPoly(1) + xvar(j)) +
               r * xvar(i) * xvar(j));

  LaurentPoly qprod(1), xprod(1);
  for (int i = 1; i <= n; ++i) {
    qprod *= Q + xvar(i);
    xprod *= xvar(i) * (LaurentPoly(1) + xvar(i));
  }
  LaurentPoly lhs = (qprod - xprod) * pref;

  LaurentPoly rhs;
  for (int k = 1; k <= n; ++k) {
    LaurentPoly num = pref * (Q - xvar(k) * xvar(k));
    std::vector<LaurentPoly> dens;
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      num *= xvar(j) * (xvar(j) + 1) *
             (Q + (Q + r) * xvar(k) + xvar(j) + xvar(k) * xvar(j)) *
             (Q - xvar(j) * xvar(k));
      dens.push_back(xvar(j) - xvar(k));
      dens.push_back(Q * (LaurentPoly(1) + xvar(j)) * (LaurentPoly(1) + xvar(k)) +
                     r * xvar(j) * xvar(k));
    }
    rhs += num.exact_div_factors(dens);
  }
  return compare_exact("leftright", {{"n", std::to_string(n)}}, lhs, rhs, timer);
}

// det(f_j(Y_i)) / Vandermonde = det(f_j[Y_1..Y_i]) for explicit Laurent
// polynomials f_j in the first X-variable.
inline IdentityReport verify_lemma_limit(const std::vector<LaurentPoly>& fs) {
  ReportTimer timer;
  const int n = static_cast<int>(fs.size());
  for (const auto& f : fs)
    for (const auto& [m, c] : f.terms())
      for (int v_ = 1; v_ < kNumVars; ++v_)
        if (m.exp(v_) != 0)
          throw PreconditionViolated("lemma-limit samples must live in X1 only");

  PolyMatrix M1(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      M1[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          fs[static_cast<size_t>(j - 1)].substitute(var::X1, xvar(i));
  }

  PolyMatrix M2(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    std::vector<LaurentPoly> args;
    for (int p = 1; p <= i; ++p) args.push_back(xvar(p));
    for (int j = 1; j <= n; ++j) {
      LaurentPoly acc;
      for (const auto& [m, c] : fs[static_cast<size_t>(j - 1)].terms()) {
        long k = m.exp(var::X1);
        acc += LaurentPoly(c) * complete_homog(k - i + 1, args);
      }
      M2[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = acc;
    }
  }
  return compare_exact("lemma-limit", {{"n", std::to_string(n)}}, det(M1),
                       det(M2) * vandermonde(n), timer);
}

// sum_r (-1)^r C(a-r-1, r) h_{a-i-2r}(X_1+X_1^-1, ..., X_i+X_i^-1)
//   = h_{a-i}(X_1, X_1^-1, ..., X_i, X_i^-1).
inline IdentityReport verify_lemma_h(int a, int i) {
  ReportTimer timer;
  if (!(1 <= i && i <= a)) throw PreconditionViolated("lemma-h needs 1 <= i <= a");
  std::vector<LaurentPoly> plus_args;
  for (int p = 1; p <= i; ++p) plus_args.push_back(xvar(p) + xvar_pow(p, -1));
  LaurentPoly lhs;
  for (int rr = 0; 2 * rr <= a - i; ++rr) {
    LaurentPoly term = LaurentPoly(binomial(a - rr - 1, rr)) *
                       complete_homog(a - i - 2 * rr, plus_args);
    if (rr % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  return compare_exact("lemma-h", {{"a", std::to_string(a)}, {"i", std::to_string(i)}},
                       lhs, complete_homog_pm(a - i, i), timer);
}

// q_m(X) = sum_r (-1)^r C(m-r-1, r) b_{m-1-2r}(X) in one variable, with
// q_i = (X^i - X^-i)/(X - X^-1) and b_i = (X + X^-1)^i.
inline IdentityReport verify_transform(int m) {
  ReportTimer timer;
  if (m < 1) throw PreconditionViolated("transform needs m >= 1");
  LaurentPoly qm = (xvar_pow(1, m) - xvar_pow(1, -m)).exact_div(xvar(1) - xvar_pow(1, -1));
  LaurentPoly rhs;
  LaurentPoly b = xvar(1) + xvar_pow(1, -1);
  for (int rr = 0; 2 * rr <= m - 1; ++rr) {
    LaurentPoly term = LaurentPoly(binomial(m - rr - 1, rr)) *
                       b.pow(static_cast<unsigned long>(m - 1 - 2 * rr));
    if (rr % 2 == 0)
      rhs += term;
    else
      rhs -= term;
  }
  return compare_exact("transform", {{"m", std::to_string(m)}}, qm, rhs, timer);
}

}  // namespace littlewood
