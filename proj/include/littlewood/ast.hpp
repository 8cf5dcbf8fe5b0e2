#pragma once

#include <vector>

#include "littlewood/agtp.hpp"
#include "littlewood/report.hpp"
#include "littlewood/symmetric.hpp"

namespace littlewood {

// Alternating sign triangle with n centered rows; row i (1-based) holds the
// global columns i..2n-i. Non-zero entries alternate along rows and columns,
// every row sums to 1, and the topmost non-zero entry of each column is 1.
struct AST {
  int n = 0;
  std::vector<std::vector<int>> rows;  // rows[i-1] has 2(n-i)+1 entries

  int entry(int i, int col) const {  // global column, 1-based
    return rows[static_cast<size_t>(i - 1)][static_cast<size_t>(col - i)];
  }
  int column_bottom_row(int col) const { return std::min(col, 2 * n - col); }
};

struct ASTStats {
  std::vector<int> one_columns;  // non-central 1-column positions, 0-based from
                                 // the left with the central column excluded
  int rho = 0;
};

inline ASTStats ast_stats(const AST& t) {
  ASTStats s;
  s.rho = 1;
  for (int col = 1; col <= 2 * t.n - 1; ++col) {
    int sum = 0;
    for (int i = 1; i <= t.column_bottom_row(col); ++i) sum += t.entry(i, col);
    if (sum != 1) continue;
    int bottom = t.entry(t.column_bottom_row(col), col);
    if (col < t.n) {
      s.one_columns.push_back(col - 1);
      if (bottom == 1) ++s.rho;  // 11-column left of the center
    } else if (col > t.n) {
      s.one_columns.push_back(col - 2);
      if (bottom == 0) ++s.rho;  // 10-column right of the center
    }
  }
  return s;
}

inline std::vector<std::pair<AST, ASTStats>> enumerate_ast(int n) {
  std::vector<std::pair<AST, ASTStats>> out;
  AST t;
  t.n = n;
  t.rows.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    t.rows[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(2 * (n - i) + 1), 0);
  // per-column last non-zero entry so far (0 while the column is still empty)
  std::vector<int> col_last(static_cast<size_t>(2 * n), 0);

  auto fill = [&](auto&& self, int i, int col, int row_sum, int row_last) -> void {
    if (col > 2 * n - i) {
      if (row_sum != 1) return;
      if (i == n) {
        out.emplace_back(t, ast_stats(t));
        return;
      }
      self(self, i + 1, i + 1, 0, 0);
      return;
    }
    const int remaining = 2 * n - i - col;  // cells after this one in the row
    for (int v = -1; v <= 1; ++v) {
      if (v != 0) {
        // row alternation; the first non-zero must be +1 to reach row sum 1
        if (row_last == 0 && v != 1) continue;
        if (row_last != 0 && v != -row_last) continue;
        // column alternation and the topmost-is-1 rule
        if (col_last[static_cast<size_t>(col)] == 0 && v != 1) continue;
        if (col_last[static_cast<size_t>(col)] != 0 && v != -col_last[static_cast<size_t>(col)])
          continue;
      }
      if (std::abs(1 - (row_sum + v)) > remaining) continue;
      t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(col - i)] = v;
      int saved = col_last[static_cast<size_t>(col)];
      if (v != 0) col_last[static_cast<size_t>(col)] = v;
      self(self, i, col + 1, row_sum + v, v != 0 ? v : row_last);
      col_last[static_cast<size_t>(col)] = saved;
    }
    t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(col - i)] = 0;
  };
  fill(fill, 1, 1, 0, 0);
  return out;
}

// prod_{i=1}^{n-1} (t + X_i) prod_{1<=i<j<=n-1} (1 + X_i + X_i X_j)(X_j - X_i)
inline LaurentPoly ast_genfun(int n) {
  LaurentPoly p(1);
  const LaurentPoly t = LaurentPoly::variable(var::t);
  for (int i = 1; i <= n - 1; ++i) p *= t + xvar(i);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      p *= (LaurentPoly(1) + xvar(i) + xvar(i) * xvar(j)) * (xvar(j) - xvar(i));
  return p;
}

// Coefficient-by-coefficient check of the generating function against the
// enumeration: for every strictly increasing position vector and every rho,
// the coefficient of t^{rho-1} X^{positions} counts the triangles.
inline IdentityReport verify_ast_theorem(int n) {
  ReportTimer timer;
  IdentityReport rep;
  rep.identity = "ast-theorem";
  rep.params = {{"n", std::to_string(n)}};
  LaurentPoly gf = ast_genfun(n);

  std::map<Monomial, mpz_class> counts;
  for (const auto& [t, stats] : enumerate_ast(n)) {
    Monomial m;
    m.set(var::t, stats.rho - 1);
    for (size_t i = 0; i < stats.one_columns.size(); ++i)
      m.set(var::X(static_cast<int>(i + 1)), stats.one_columns[i]);
    counts[m] += 1;
  }

  rep.lhs_terms = gf.num_terms();
  rep.rhs_terms = counts.size();
  rep.verified = true;
  auto fail = [&](const Monomial& m, const mpz_class& lhs, const mpz_class& rhs) {
    rep.verified = false;
    if (!rep.first_mismatch) rep.first_mismatch = FirstMismatch{m, lhs, rhs};
  };
  // every strictly-increasing monomial of the generating function must count
  for (const auto& [m, c] : gf.terms()) {
    bool strict = true;
    for (int i = 1; i + 1 <= n - 1; ++i)
      if (m.exp(var::X(i)) >= m.exp(var::X(i + 1))) strict = false;
    for (int i = 1; i <= n - 1; ++i)
      if (m.exp(var::X(i)) < 0 || m.exp(var::X(i)) > 2 * n - 3) strict = false;
    if (!strict) continue;
    auto it = counts.find(m);
    mpz_class have = it == counts.end() ? mpz_class(0) : it->second;
    if (have != c) fail(m, c, have);
  }
  // and every enumerated statistic must be present in the generating function
  for (const auto& [m, c] : counts)
    if (gf.coefficient(m) != c) fail(m, gf.coefficient(m), c);
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

// X -> 1 generating function of arrowed patterns via the shift-operator
// formula applied to the principal specialization:
// (t+u+v+w)^n prod (t + u E_{k_i} + v E_{k_j}^{-1} + w E E^{-1})
//   prod (k_j - k_i + j - i)/(j - i).
inline LaurentPoly agtp_count_at_one(const std::vector<long>& k) {
  const int n = static_cast<int>(k.size());
  if (n > 5) throw PreconditionViolated("operator expansion capped at n <= 5");
  std::map<Monomial, mpq_class> acc;
  for (const auto& [delta, coeff] : expand_pair_operator(n)) {
    std::vector<long> shifted(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      shifted[static_cast<size_t>(i)] = k[static_cast<size_t>(i)] + delta[static_cast<size_t>(i)];
    mpq_class value = weyl_dimension(shifted);
    if (value == 0) continue;
    for (const auto& [m, c] : coeff.terms()) acc[m] += mpq_class(c) * value;
  }
  LaurentPoly sum;
  for (auto& [m, q] : acc) {
    q.canonicalize();
    if (q == 0) continue;
    if (q.get_den() != 1) throw NonIntegerResult("operator sum must have integer coefficients");
    sum.add_term(m, q.get_num());
  }
  LaurentPoly boundary(1);
  for (int i = 1; i <= n; ++i)
    boundary *= LaurentPoly::variable(var::t) + LaurentPoly::variable(var::u) +
                LaurentPoly::variable(var::v) + LaurentPoly::variable(var::w);
  return boundary * sum;
}

// Exact constant-term extraction from the bounded-position expression; the
// result is the generating function (in t, by rho-1) of ASTs whose
// non-central 1-columns lie in [p, q].
inline LaurentPoly ast_bounded_constant_term(int n, int p, int q) {
  if (!(0 <= p && p <= q && q <= std::max(0, 2 * n - 3)))
    throw PreconditionViolated("needs 0 <= p <= q <= 2n-3");
  const int vars = n - 1;
  if (vars == 0) return LaurentPoly(1);
  const LaurentPoly t = LaurentPoly::variable(var::t);
  LaurentPoly inner(1);
  for (int i = 1; i <= vars; ++i)
    for (int j = i + 1; j <= vars; ++j)
      inner *= LaurentPoly(1) + xvar(j) + xvar(i) * xvar(j);
  inner *= bounded_ksum(vars, q - p, 0);
  LaurentPoly expr = asym(inner, vars);
  // the inversion X -> X^-1 of the generating function pulls out
  // X_i^{-2n+3}; with the lower position bound p this shifts to -2n+3+p
  for (int i = 1; i <= vars; ++i) {
    expr *= (LaurentPoly(1) + t * xvar(i)) * xvar_pow(i, -2 * n + 3 + p);
    for (int j = i + 1; j <= vars; ++j) expr *= xvar(i) - xvar(j);
  }
  LaurentPoly ct;
  for (const auto& [m, c] : expr.terms()) {
    bool constant = true;
    for (int i = 0; i < kMaxX; ++i)
      if (m.e[static_cast<size_t>(i)] != 0) constant = false;
    if (constant) ct.add_term(m, c);
  }
  return ct;
}

inline LaurentPoly ast_bounded_count_direct(int n, int p, int q) {
  LaurentPoly acc;
  for (const auto& [t, stats] : enumerate_ast(n)) {
    bool ok = true;
    for (int pos : stats.one_columns)
      if (pos < p || pos > q) ok = false;
    if (ok) acc += LaurentPoly::variable(var::t, stats.rho - 1);
  }
  return acc;
}

}  // namespace littlewood
