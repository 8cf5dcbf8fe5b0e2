#pragma once

#include <gmpxx.h>

#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/symmetric.hpp"

namespace littlewood {

// Signed interval si(a,b): [a,b] when a <= b, empty when b = a-1, and the
// negative interval [b+1, a-1] when b < a-1. Negative intervals contribute
// -1 to the sign of the pattern using them.
struct SignedInterval {
  long a = 0, b = 0;

  bool empty() const { return b == a - 1; }
  bool negative() const { return b < a - 1; }

  long first() const { return negative() ? b + 1 : a; }
  long last() const { return negative() ? a - 1 : b; }

  bool contains(long x) const { return !empty() && x >= first() && x <= last(); }
};

inline SignedInterval si(long a, long b) { return SignedInterval{a, b}; }

// Triangular integer array; rows_[i] has i+1 entries, rows_[n-1] is the
// bottom row.
struct GTPattern {
  std::vector<std::vector<long>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  long entry(int i, int j) const {  // 1-based, 1 <= j <= i <= n
    return rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  long row_sum(int i) const {  // 1-based; row 0 sums to 0
    if (i == 0) return 0;
    long s = 0;
    for (long v : rows[static_cast<size_t>(i - 1)]) s += v;
    return s;
  }

  int sign() const {
    int neg = 0;
    for (int i = 1; i < size(); ++i)
      for (int j = 1; j <= i; ++j)
        if (si(entry(i + 1, j), entry(i + 1, j + 1)).negative()) ++neg;
    return neg % 2 == 0 ? 1 : -1;
  }

  bool classically_valid() const {
    for (int i = 1; i < size(); ++i)
      for (int j = 1; j <= i; ++j)
        if (!(entry(i + 1, j) <= entry(i, j) && entry(i, j) <= entry(i + 1, j + 1)))
          return false;
    return true;
  }
};

// All generalized patterns with the given bottom row, each with its sign.
// Deterministic order: depth-first from the bottom up, entries left to right
// in increasing value.
inline std::vector<std::pair<GTPattern, int>> enumerate_gt(const std::vector<long>& bottom) {
  if (bottom.empty()) throw PreconditionViolated("enumerate_gt: empty bottom row");
  const int n = static_cast<int>(bottom.size());
  std::vector<std::pair<GTPattern, int>> out;
  GTPattern work;
  work.rows.assign(static_cast<size_t>(n), {});
  work.rows[static_cast<size_t>(n - 1)] = bottom;

  auto recurse = [&](auto&& self, int level) -> void {  // level = row being filled (1-based)
    if (level == 0) {
      GTPattern p = work;
      out.emplace_back(std::move(p), work.sign());
      return;
    }
    const auto& below = work.rows[static_cast<size_t>(level)];
    std::vector<SignedInterval> iv(static_cast<size_t>(level));
    for (int j = 0; j < level; ++j) {
      iv[static_cast<size_t>(j)] = si(below[static_cast<size_t>(j)], below[static_cast<size_t>(j + 1)]);
      if (iv[static_cast<size_t>(j)].empty()) return;
    }
    auto& row = work.rows[static_cast<size_t>(level - 1)];
    row.assign(static_cast<size_t>(level), 0);
    auto fill = [&](auto&& fill_self, int j) -> void {
      if (j == level) {
        self(self, level - 1);
        return;
      }
      const auto& I = iv[static_cast<size_t>(j)];
      for (long x = I.first(); x <= I.last(); ++x) {
        row[static_cast<size_t>(j)] = x;
        fill_self(fill_self, j + 1);
      }
    };
    fill(fill, 0);
  };
  recurse(recurse, n - 1);
  return out;
}

// Bialternant ratio, extended to arbitrary integer sequences:
//   s_seq = ASym[ prod X_i^{seq_i + n - i} ] / prod_{i<j} (X_i - X_j).
inline LaurentPoly schur_bialternant(const std::vector<long>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) throw PreconditionViolated("schur_bialternant: empty sequence");
  Monomial m;
  for (int i = 1; i <= n; ++i) m.set(var::X(i), static_cast<int>(seq[static_cast<size_t>(i - 1)]) + n - i);
  LaurentPoly num = asym(LaurentPoly::term(m, 1), n);
  if (num.is_zero()) return num;
  return num.exact_div(vandermonde_descending(n));
}

// Signed X-weight sum over all generalized patterns with the given bottom
// row; equals schur_bialternant(reverse(bottom)).
inline LaurentPoly schur_via_patterns(const std::vector<long>& bottom) {
  LaurentPoly acc;
  for (const auto& [p, sign] : enumerate_gt(bottom)) {
    Monomial m;
    for (int i = 1; i <= p.size(); ++i)
      m.set(var::X(i), static_cast<int>(p.row_sum(i) - p.row_sum(i - 1)));
    acc.add_term(m, sign);
  }
  return acc;
}

// s_{(k_n,...,k_1)}(1,...,1) = prod_{i<j} (k_j - k_i + j - i)/(j - i),
// evaluated exactly; integrality is asserted.
inline mpz_class principal_specialization(const std::vector<long>& k) {
  const int n = static_cast<int>(k.size());
  for (int i = 1; i < n; ++i)
    if (k[static_cast<size_t>(i - 1)] >= k[static_cast<size_t>(i)])
      throw PreconditionViolated("principal_specialization needs a strictly increasing list");
  mpq_class acc(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      acc *= mpq_class(k[static_cast<size_t>(j - 1)] - k[static_cast<size_t>(i - 1)] + j - i, j - i);
    }
  acc.canonicalize();
  if (acc.get_den() != 1) throw NonIntegerResult("principal specialization is not an integer");
  return acc.get_num();
}

// Same product without the strictly-increasing precondition; used by the
// shift-operator engines where intermediate sequences are arbitrary.
inline mpq_class weyl_dimension(const std::vector<long>& k) {
  const int n = static_cast<int>(k.size());
  mpq_class acc(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      acc *= mpq_class(k[static_cast<size_t>(j - 1)] - k[static_cast<size_t>(i - 1)] + j - i, j - i);
  acc.canonicalize();
  return acc;
}

}  // namespace littlewood
