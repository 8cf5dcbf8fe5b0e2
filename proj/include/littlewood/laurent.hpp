#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/monomial.hpp"

namespace littlewood {

// Sparse exact Laurent polynomial over the fixed registry with
// arbitrary-precision integer coefficients. Canonical form: no zero
// coefficients stored; term order is the lexicographic registry order.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  LaurentPoly() = default;
  /*implicit*/ LaurentPoly(long c) { add_term(Monomial::one(), mpz_class(c)); }
  /*implicit*/ LaurentPoly(const mpz_class& c) { add_term(Monomial::one(), c); }

  static LaurentPoly term(const Monomial& m, mpz_class c) {
    LaurentPoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  static LaurentPoly variable(int v, int exponent = 1) {
    return term(Monomial::of(v, exponent), 1);
  }

  const TermMap& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
  }

  void add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(a.terms_.size() * 2);
    const LaurentPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const LaurentPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    mpz_class prod;
    for (const auto& [ma, ca] : outer.terms_) {
      for (const auto& [mb, cb] : inner.terms_) {
        prod = ca * cb;
        auto [it, fresh] = acc.emplace(ma * mb, prod);
        if (!fresh) it->second += prod;
      }
    }
    LaurentPoly out;
    for (auto& [m, c] : acc)
      if (c != 0) out.terms_.emplace(m, std::move(c));
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiply in place by a single term; cheaper than building a temporary.
  void scale(const Monomial& m, const mpz_class& c) {
    if (c == 0) {
      terms_.clear();
      return;
    }
    TermMap out;
    auto hint = out.end();
    for (const auto& [mm, cc] : terms_)
      hint = out.emplace_hint(hint, mm * m, cc * c);
    terms_ = std::move(out);
  }

  LaurentPoly pow(unsigned long k) const {
    LaurentPoly result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  // Exponent range of one variable over all terms; {0,0} for the zero poly.
  std::pair<int, int> exponent_range(int v) const {
    if (terms_.empty()) return {0, 0};
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) {
      lo = std::min(lo, m.exp(v));
      hi = std::max(hi, m.exp(v));
    }
    return {lo, hi};
  }

  int min_x_degree() const {
    int lo = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) lo = std::min(lo, m.x_degree());
    return terms_.empty() ? 0 : lo;
  }
  int max_x_degree() const {
    int hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) hi = std::max(hi, m.x_degree());
    return terms_.empty() ? 0 : hi;
  }

  // True iff the polynomial is c*X^alpha with c = +-1 (a unit of the ring).
  bool is_unit_monomial() const {
    return terms_.size() == 1 &&
           (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }
  bool is_single_term() const { return terms_.size() == 1; }

  LaurentPoly unit_inverse() const {
    if (!is_unit_monomial())
      throw NonInvertibleArgument("not an invertible monomial: " + to_string());
    const auto& [m, c] = *terms_.begin();
    return term(m.inverse(), c);
  }

  // Relabel X-variables: X_{i+1} -> X_{perm[i]+1}. perm is a permutation of
  // 0..n-1; X-variables beyond n must be absent.
  LaurentPoly permute_x(const std::vector<int>& perm) const {
    const int n = static_cast<int>(perm.size());
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      for (int i = 0; i < n; ++i) mm.e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = m.e[static_cast<size_t>(i)];
      out.terms_.emplace(mm, c);
    }
    return out;
  }

  // Image under the substitution homomorphism. Each bound variable is
  // replaced by a Laurent polynomial; negative occurrences require the
  // binding to have an exact inverse (a signed monomial).
  LaurentPoly substitute(const std::map<int, LaurentPoly>& bindings) const {
    LaurentPoly out;
    std::map<std::pair<int, int>, LaurentPoly> pow_cache;
    for (const auto& [m, c] : terms_) {
      LaurentPoly factor = term(strip_bound(m, bindings), c);
      for (const auto& [v, p] : bindings) {
        int k = m.exp(v);
        if (k == 0) continue;
        auto key = std::make_pair(v, k);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) {
          LaurentPoly pk;
          if (k > 0) {
            pk = p.pow(static_cast<unsigned long>(k));
          } else {
            if (p.is_zero())
              throw NonInvertibleSubstitution("binding " + var_name(v) +
                                              " -> 0 against negative exponent");
            if (!p.is_unit_monomial())
              throw NonInvertibleSubstitution(
                  "binding for " + var_name(v) +
                  " has no Laurent inverse but occurs with exponent " +
                  std::to_string(k));
            pk = p.unit_inverse().pow(static_cast<unsigned long>(-k));
          }
          it = pow_cache.emplace(key, std::move(pk)).first;
        }
        factor *= it->second;
      }
      out += factor;
    }
    return out;
  }

  LaurentPoly substitute(int v, const LaurentPoly& p) const {
    return substitute(std::map<int, LaurentPoly>{{v, p}});
  }

  // Exact division; throws InexactDivision when *this is not a multiple of
  // den. Internally shifts both operands to nonnegative exponents and runs
  // graded-lex leading-term elimination, which terminates on any input.
  LaurentPoly exact_div(const LaurentPoly& den) const {
    if (den.is_zero()) throw InexactDivision("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    if (den.is_single_term()) {
      const auto& [dm, dc] = *den.terms_.begin();
      LaurentPoly out;
      for (const auto& [m, c] : terms_) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
        if (rem != 0) throw InexactDivision("coefficient not divisible");
        out.terms_.emplace(m / dm, std::move(q));
      }
      return out;
    }

    Monomial num_shift = min_exponents(), den_shift = den.min_exponents();
    std::map<Monomial, mpz_class, GrlexLess> r;
    for (const auto& [m, c] : terms_) r.emplace(m / num_shift, c);
    std::map<Monomial, mpz_class, GrlexLess> d;
    for (const auto& [m, c] : den.terms_) d.emplace(m / den_shift, c);

    const Monomial& dlead = d.rbegin()->first;
    const mpz_class& dc = d.rbegin()->second;
    LaurentPoly quotient;
    while (!r.empty()) {
      auto lead = std::prev(r.end());
      Monomial qm = lead->first / dlead;
      for (size_t i = 0; i < kNumVars; ++i)
        if (qm.e[i] < 0) throw InexactDivision("monomial not divisible");
      mpz_class qc, rem;
      mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), lead->second.get_mpz_t(),
                  dc.get_mpz_t());
      if (rem != 0) throw InexactDivision("leading coefficient not divisible");
      quotient.add_term(qm, qc);
      for (const auto& [dm, dcc] : d) {
        Monomial m = dm * qm;
        mpz_class delta = dcc * qc;
        auto it = r.find(m);
        if (it == r.end()) {
          r.emplace(m, -delta);
        } else {
          it->second -= delta;
          if (it->second == 0) r.erase(it);
        }
      }
    }
    quotient.scale(num_shift / den_shift, 1);
    return quotient;
  }

  LaurentPoly exact_div_factors(const std::vector<LaurentPoly>& factors) const {
    LaurentPoly q = *this;
    for (const auto& f : factors) q = q.exact_div(f);
    return q;
  }

  mpz_class coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  mpz_class constant_coefficient() const { return coefficient(Monomial::one()); }

  // Canonical text form, e.g. "-1*X1^-1*Q^2 + 3*t*X2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      mpz_class a = c;
      if (s.empty()) {
        // keep sign on the coefficient
      } else if (a < 0) {
        s += " - ";
        a = -a;
      } else {
        s += " + ";
      }
      s += a.get_str();
      if (!m.is_one()) s += "*" + m.to_string();
    }
    return s;
  }

 private:
  struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db;
      return a < b;
    }
  };

  Monomial min_exponents() const {
    Monomial m;
    bool first = true;
    for (const auto& [mm, c] : terms_) {
      if (first) {
        m = mm;
        first = false;
      } else {
        for (size_t i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
      }
    }
    return m;
  }

  static Monomial strip_bound(const Monomial& m,
                              const std::map<int, LaurentPoly>& bindings) {
    Monomial mm = m;
    for (const auto& [v, p] : bindings) mm.set(v, 0);
    return mm;
  }

  TermMap terms_;
};

inline LaurentPoly operator*(const mpz_class& c, const LaurentPoly& p) {
  return LaurentPoly(c) * p;
}

inline LaurentPoly xvar(int i) { return LaurentPoly::variable(var::X(i)); }
inline LaurentPoly xvar_pow(int i, int k) {
  return LaurentPoly::variable(var::X(i), k);
}

}  // namespace littlewood
