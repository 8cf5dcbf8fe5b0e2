#pragma once

#include <limits>
#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/laurent.hpp"

namespace littlewood {

// Formal power series truncated in the total X-degree. A value represents a
// congruence class modulo { X-degree > cap }; `lo` is a guaranteed lower
// bound on the X-degree of the full (untruncated) object, which is what makes
// truncated multiplication sound in the presence of X^-1 factors:
//   cap(f*g) = min(cap(f)+lo(g), cap(g)+lo(f)).
class Series {
 public:
  Series() : lo_(0), cap_(0) {}

  static Series from_poly(const LaurentPoly& p, int cap) {
    Series s;
    s.cap_ = cap;
    s.lo_ = p.is_zero() ? cap : p.min_x_degree();
    for (const auto& [m, c] : p.terms())
      if (m.x_degree() <= cap) s.p_.add_term(m, c);
    return s;
  }

  const LaurentPoly& poly() const { return p_; }
  int cap() const { return cap_; }
  int lo() const { return lo_; }

  Series& operator+=(const Series& o) {
    cap_ = std::min(cap_, o.cap_);
    lo_ = std::min(lo_, o.lo_);
    p_ += o.p_;
    truncate();
    return *this;
  }
  Series& operator-=(const Series& o) {
    cap_ = std::min(cap_, o.cap_);
    lo_ = std::min(lo_, o.lo_);
    p_ -= o.p_;
    truncate();
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    Series s;
    s.cap_ = std::min(a.cap_ + b.lo_, b.cap_ + a.lo_);
    s.lo_ = a.lo_ + b.lo_;
    s.p_ = a.p_ * b.p_;
    s.truncate();
    return s;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series pow(unsigned long k, int at_least_cap) const {
    Series r = from_poly(LaurentPoly(1), at_least_cap);
    for (unsigned long i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // Multiply by an exact unit monomial (shifts both bounds).
  Series shifted(const LaurentPoly& unit) const {
    Series s = *this;
    int d = unit.min_x_degree();
    s.p_ = s.p_ * unit;
    s.cap_ += d;
    s.lo_ += d;
    return s;
  }

  bool congruent(const Series& o, int at_cap) const {
    if (cap_ < at_cap || o.cap_ < at_cap)
      throw PreconditionViolated("series not known to the requested degree");
    LaurentPoly diff = p_ - o.p_;
    for (const auto& [m, c] : diff.terms())
      if (m.x_degree() <= at_cap) return false;
    return true;
  }

 private:
  void truncate() {
    LaurentPoly q;
    for (const auto& [m, c] : p_.terms())
      if (m.x_degree() <= cap_) q.add_term(m, c);
    p_ = std::move(q);
  }

  int lo_;
  int cap_;
  LaurentPoly p_;
};

// 1/(1-mu) = sum mu^k for a series with lo(mu) >= 1.
inline Series geometric_inverse(const Series& mu) {
  if (mu.lo() < 1)
    throw NonExpandableDenominator("geometric expansion needs positive minimal X-degree");
  Series acc = Series::from_poly(LaurentPoly(1), mu.cap());
  Series power = acc;
  for (int k = 1; k * mu.lo() <= mu.cap(); ++k) {
    power *= mu;
    acc += power;
  }
  return acc;
}

// Expand 1/factor where factor is an invertible monomial, or a two-term
// polynomial t1+t2 whose lower-X-degree term t1 is an invertible monomial and
// deg(t2)-deg(t1) >= 1 (covers 1-mu, Q+X_i, Q-X_iX_j and friends).
inline Series expand_inverse_factor(const LaurentPoly& factor, int cap) {
  if (factor.is_unit_monomial())
    return Series::from_poly(factor.unit_inverse(), cap);
  if (factor.num_terms() == 2) {
    auto it = factor.terms().begin();
    Monomial m1 = it->first, m2 = std::next(it)->first;
    mpz_class c1 = it->second, c2 = std::next(it)->second;
    if (m1.x_degree() > m2.x_degree()) {
      std::swap(m1, m2);
      std::swap(c1, c2);
    }
    if ((c1 == 1 || c1 == -1) && m2.x_degree() - m1.x_degree() >= 1) {
      LaurentPoly t1_inv = LaurentPoly::term(m1.inverse(), c1);
      // factor = t1 (1 - mu) with mu = -t2/t1
      LaurentPoly mu = LaurentPoly::term(m2 / m1, -c2 * c1);
      return geometric_inverse(Series::from_poly(mu, cap + std::max(0, -m1.x_degree())))
          .shifted(t1_inv);
    }
  }
  throw NonExpandableDenominator("cannot expand 1/(" + factor.to_string() + ")");
}

// Truncated expansion of prod(numerators) / prod(denominators), exact modulo
// X-degree > cap. Internally re-runs with a widened working cap when the
// X^-1 content of the factors eats into the requested precision.
inline Series series_expand(const std::vector<LaurentPoly>& numerators,
                            const std::vector<LaurentPoly>& denominators, int cap) {
  for (int working = cap, attempt = 0; attempt < 64; ++attempt) {
    Series acc = Series::from_poly(LaurentPoly(1), working);
    for (const auto& f : numerators) acc *= Series::from_poly(f, working);
    for (const auto& f : denominators) acc *= expand_inverse_factor(f, working);
    if (acc.cap() >= cap) return acc;
    working += cap - acc.cap();
  }
  throw PreconditionViolated("series_expand failed to reach the requested cap");
}

}  // namespace littlewood
