#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "littlewood/schur.hpp"

namespace littlewood {

// Entry decorations. NE is the up-right arrow, NW the up-left arrow, NWNE
// both. Weight roles: None -> t, NE -> u, NW -> v, NWNE -> w.
enum class Decoration : uint8_t { None = 0, NE = 1, NW = 2, NWNE = 3 };

inline bool points_ne(Decoration d) { return d == Decoration::NE || d == Decoration::NWNE; }
inline bool points_nw(Decoration d) { return d == Decoration::NW || d == Decoration::NWNE; }

inline const char* decoration_name(Decoration d) {
  switch (d) {
    case Decoration::None: return "N";
    case Decoration::NE: return "NE";
    case Decoration::NW: return "NW";
    case Decoration::NWNE: return "NWNE";
  }
  return "?";
}

// Arrowed Gelfand-Tsetlin pattern: triangular integer array together with a
// same-shape decoration array. For every non-bottom entry a with SW-neighbor
// b and SE-neighbor c, a must lie in si(b', c') where b' = b+1 iff b points
// NE and c' = c-1 iff c points NW. Negative intervals si(b', c') contribute
// -1 each to the sign.
struct ArrowedGT {
  std::vector<std::vector<long>> entries;          // entries[i] has i+1 values
  std::vector<std::vector<Decoration>> decorations;

  int size() const { return static_cast<int>(entries.size()); }

  long entry(int i, int j) const {  // 1-based
    return entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  Decoration decor(int i, int j) const {
    return decorations[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }

  SignedInterval entry_interval(int i, int j) const {
    // interval constraining entry (i-1, j) from the pair below it
    long b = entry(i, j), c = entry(i, j + 1);
    if (points_ne(decor(i, j))) ++b;
    if (points_nw(decor(i, j + 1))) --c;
    return si(b, c);
  }

  bool valid() const {
    for (int i = 2; i <= size(); ++i)
      for (int j = 1; j < i; ++j)
        if (!entry_interval(i, j).contains(entry(i - 1, j))) return false;
    return true;
  }

  int sign() const {
    int neg = 0;
    for (int i = 2; i <= size(); ++i)
      for (int j = 1; j < i; ++j)
        if (entry_interval(i, j).negative()) ++neg;
    return neg % 2 == 0 ? 1 : -1;
  }

  // W(A) = sgn(A) t^{#None} u^{#NE} v^{#NW} w^{#NWNE}
  //        prod_i X_i^{rowsum_i - rowsum_{i-1} + #ne(i) - #nw(i)}
  // where #ne counts decorations containing the NE arrow (NE and NWNE), and
  // likewise #nw.
  LaurentPoly weight() const {
    Monomial m;
    int counts[4] = {0, 0, 0, 0};
    long prev_sum = 0;
    for (int i = 1; i <= size(); ++i) {
      long sum = 0;
      int ne = 0, nw = 0;
      for (int j = 1; j <= i; ++j) {
        sum += entry(i, j);
        Decoration d = decor(i, j);
        ++counts[static_cast<int>(d)];
        if (points_ne(d)) ++ne;
        if (points_nw(d)) ++nw;
      }
      m.set(var::X(i), static_cast<int>(sum - prev_sum) + ne - nw);
      prev_sum = sum;
    }
    m.set(var::t, counts[0]);
    m.set(var::u, counts[1]);
    m.set(var::v, counts[2]);
    m.set(var::w, counts[3]);
    return LaurentPoly::term(m, sign());
  }
};

// Streaming enumeration of all AGTPs with the given bottom row; the visitor
// receives each object with its signed weight.
inline void for_each_agtp(const std::vector<long>& bottom,
                          const std::function<void(const ArrowedGT&, const LaurentPoly&)>& visit) {
  if (bottom.empty()) throw PreconditionViolated("empty bottom row");
  const int n = static_cast<int>(bottom.size());
  ArrowedGT work;
  work.entries.resize(static_cast<size_t>(n));
  work.decorations.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    work.entries[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 0);
    work.decorations[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, Decoration::None);
  }
  work.entries[static_cast<size_t>(n - 1)] = bottom;

  // Rows are processed bottom-up. step(lev) assumes row lev has its values
  // set; it chooses the row's decorations, derives the intervals constraining
  // the row above, fills its entries left to right in increasing value, and
  // recurses.
  auto step = [&](auto&& self, int lev) -> void {  // lev: 0-based row index
    auto& decs = work.decorations[static_cast<size_t>(lev)];
    const int len = lev + 1;
    auto choose = [&](auto&& choose_self, int j) -> void {
      if (j < len) {
        for (int d = 0; d < 4; ++d) {
          decs[static_cast<size_t>(j)] = static_cast<Decoration>(d);
          choose_self(choose_self, j + 1);
        }
        return;
      }
      if (lev == 0) {
        visit(work, work.weight());
        return;
      }
      std::vector<SignedInterval> iv(static_cast<size_t>(lev));
      for (int p = 1; p <= lev; ++p) {
        iv[static_cast<size_t>(p - 1)] = work.entry_interval(lev + 1, p);
        if (iv[static_cast<size_t>(p - 1)].empty()) return;
      }
      auto& row = work.entries[static_cast<size_t>(lev - 1)];
      auto fill = [&](auto&& fill_self, int p) -> void {
        if (p == lev) {
          self(self, lev - 1);
          return;
        }
        for (long x = iv[static_cast<size_t>(p)].first(); x <= iv[static_cast<size_t>(p)].last(); ++x) {
          row[static_cast<size_t>(p)] = x;
          fill_self(fill_self, p + 1);
        }
      };
      fill(fill, 0);
    };
    choose(choose, 0);
  };
  step(step, n - 1);
}

inline std::vector<std::pair<ArrowedGT, LaurentPoly>> enumerate_agtp(
    const std::vector<long>& bottom) {
  std::vector<std::pair<ArrowedGT, LaurentPoly>> out;
  for_each_agtp(bottom, [&](const ArrowedGT& a, const LaurentPoly& w) { out.emplace_back(a, w); });
  return out;
}

// Generating function by direct enumeration.
inline LaurentPoly agtp_genfun_enumerated(const std::vector<long>& bottom) {
  LaurentPoly acc;
  for_each_agtp(bottom, [&](const ArrowedGT&, const LaurentPoly& w) { acc += w; });
  return acc;
}

// Expansion of prod_{i<j} (t + u E_{k_i} + v E_{k_j}^{-1} + w E_{k_i} E_{k_j}^{-1})
// into shift vectors: map from delta to the t,u,v,w coefficient polynomial.
inline std::map<std::vector<long>, LaurentPoly> expand_pair_operator(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::map<std::vector<long>, LaurentPoly> by_shift;
  std::vector<long> delta(static_cast<size_t>(n), 0);
  int counts[4] = {0, 0, 0, 0};
  auto expand = [&](auto&& self, size_t idx) -> void {
    if (idx == pairs.size()) {
      Monomial m;
      m.set(var::t, counts[0]);
      m.set(var::u, counts[1]);
      m.set(var::v, counts[2]);
      m.set(var::w, counts[3]);
      by_shift[delta].add_term(m, 1);
      return;
    }
    auto [i, j] = pairs[idx];
    for (int choice = 0; choice < 4; ++choice) {
      ++counts[choice];
      if (choice == 1) ++delta[static_cast<size_t>(i)];
      if (choice == 2) --delta[static_cast<size_t>(j)];
      if (choice == 3) {
        ++delta[static_cast<size_t>(i)];
        --delta[static_cast<size_t>(j)];
      }
      self(self, idx + 1);
      --counts[choice];
      if (choice == 1) --delta[static_cast<size_t>(i)];
      if (choice == 2) ++delta[static_cast<size_t>(j)];
      if (choice == 3) {
        --delta[static_cast<size_t>(i)];
        ++delta[static_cast<size_t>(j)];
      }
    }
  };
  expand(expand, 0);
  return by_shift;
}

// Generating function via the shift-operator formula:
//   prod_i (t + u X_i + v X_i^{-1} + w)
//   prod_{i<j} (t + u E_{k_i} + v E_{k_j}^{-1} + w E_{k_i} E_{k_j}^{-1})
//   s_{(k_n,...,k_1)}.
// The operator product is expanded into shift vectors first; the k_i are
// specialized only afterwards, through the extended Schur polynomial.
inline LaurentPoly agtp_genfun_operator(const std::vector<long>& k) {
  const int n = static_cast<int>(k.size());
  if (n == 0) throw PreconditionViolated("empty bottom row");
  if (n > 5) throw PreconditionViolated("operator expansion capped at n <= 5");
  auto by_shift = expand_pair_operator(n);

  LaurentPoly acc;
  for (const auto& [d, coeff] : by_shift) {
    std::vector<long> seq(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      seq[static_cast<size_t>(i)] = k[static_cast<size_t>(n - 1 - i)] + d[static_cast<size_t>(n - 1 - i)];
    LaurentPoly s = schur_bialternant(seq);
    if (!s.is_zero()) acc += coeff * s;
  }

  LaurentPoly boundary(1);
  for (int i = 1; i <= n; ++i)
    boundary *= LaurentPoly::variable(var::t) + LaurentPoly::variable(var::u) * xvar(i) +
                LaurentPoly::variable(var::v) * xvar_pow(i, -1) + LaurentPoly::variable(var::w);
  return boundary * acc;
}

// Generating function via the bialternant form:
//   ASym[ prod_{1<=i<=j<=n} (v + w X_i + t X_j + u X_i X_j) prod_i X_i^{k_i-1} ]
//   / prod_{i<j} (X_j - X_i).
inline LaurentPoly agtp_genfun_bialternant(const std::vector<long>& k) {
  const int n = static_cast<int>(k.size());
  if (n == 0) throw PreconditionViolated("empty bottom row");
  LaurentPoly inner(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      inner *= LaurentPoly::variable(var::v) + LaurentPoly::variable(var::w) * xvar(i) +
               LaurentPoly::variable(var::t) * xvar(j) +
               LaurentPoly::variable(var::u) * xvar(i) * xvar(j);
  Monomial shift;
  for (int i = 1; i <= n; ++i) shift.set(var::X(i), static_cast<int>(k[static_cast<size_t>(i - 1)]) - 1);
  inner.scale(shift, 1);
  LaurentPoly num = asym(inner, n);
  if (num.is_zero()) return num;
  return num.exact_div(vandermonde(n));
}

// Sum of prod_i X_i^{k_i + offset} over 0 <= k_1 < ... < k_n <= m.
inline LaurentPoly bounded_ksum(int n, int m, int offset) {
  LaurentPoly acc;
  std::vector<int> k(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == n) {
      Monomial mm;
      for (int i = 0; i < n; ++i) mm.set(var::X(i + 1), k[static_cast<size_t>(i)] + offset);
      acc.add_term(mm, 1);
      return;
    }
    for (int x = low; x <= m; ++x) {
      k[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 0);
  return acc;
}

enum class LhsForm { Plain, Normalized };

// The bounded left-hand sides: Plain is the sum side of the w-deformed
// bounded identity; Normalized carries the diagonal factors and the X^{k-1}
// shift and equals the AGTP generating function at t=u=v=1.
inline LaurentPoly lhs_bounded(int n, int m, LhsForm form) {
  if (n < 1 || m < n - 1) throw PreconditionViolated("lhs_bounded needs n >= 1, m >= n-1");
  LaurentPoly prod(1);
  const LaurentPoly wv = LaurentPoly::variable(var::w);
  for (int i = 1; i <= n; ++i)
    for (int j = (form == LhsForm::Plain ? i + 1 : i); j <= n; ++j)
      prod *= LaurentPoly(1) + wv * xvar(i) + xvar(j) + xvar(i) * xvar(j);
  prod *= bounded_ksum(n, m, form == LhsForm::Plain ? 0 : -1);
  LaurentPoly num = asym(prod, n);
  if (num.is_zero()) return num;
  return num.exact_div(vandermonde(n));
}

}  // namespace littlewood
