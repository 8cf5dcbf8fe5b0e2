#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "littlewood/homog.hpp"
#include "littlewood/json_io.hpp"
#include "littlewood/laurent.hpp"
#include "littlewood/series.hpp"
#include "littlewood/symmetric.hpp"

using namespace littlewood;

namespace {

LaurentPoly X(int i) { return xvar(i); }
LaurentPoly Xp(int i, int k) { return xvar_pow(i, k); }

Monomial random_x_monomial(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Monomial m;
  for (int i = 1; i <= n; ++i) m.set(var::X(i), d(rng));
  return m;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK((X(1) + 1) * (X(1) - 1) == X(1) * X(1) - 1);
  CHECK(X(1) * Xp(1, -1) == LaurentPoly(1));
  CHECK((LaurentPoly(1) + X(1) + X(2)) * LaurentPoly(0) == LaurentPoly(0));
  CHECK((X(1) + X(2)) - (X(2) + X(1)) == LaurentPoly(0));
}

TEST_CASE("substitute") {
  LaurentPoly p = X(1) + X(2);
  CHECK(p.substitute({{var::X1, LaurentPoly(1)}, {var::X(2), LaurentPoly(1)}}) == LaurentPoly(2));

  LaurentPoly q = LaurentPoly::variable(var::Q) +
                  (LaurentPoly::variable(var::Q) + LaurentPoly::variable(var::r)) * X(1);
  LaurentPoly image = q.substitute(
      {{var::Q, LaurentPoly(1)},
       {var::r, LaurentPoly::variable(var::w) - 1}});
  CHECK(image == LaurentPoly(1) + LaurentPoly::variable(var::w) * X(1));

  LaurentPoly lr = Xp(1, -1) + 1 + LaurentPoly::variable(var::w) + X(1);
  CHECK(lr.substitute({{var::X1, LaurentPoly(1)}, {var::w, LaurentPoly(0)}}) == LaurentPoly(3));

  CHECK_THROWS_AS(lr.substitute(var::X1, LaurentPoly(0)), NonInvertibleSubstitution);
  CHECK_THROWS_AS(lr.substitute(var::X1, LaurentPoly(1) + X(2)), NonInvertibleSubstitution);
}

TEST_CASE("exact division") {
  LaurentPoly v = X(2) - X(1);
  CHECK((v * (LaurentPoly(1) + X(1) * X(2))).exact_div(v) == LaurentPoly(1) + X(1) * X(2));
  CHECK(asym(X(2), 2).exact_div(v) == LaurentPoly(1));
  CHECK((LaurentPoly(1) - X(1) * X(1)).exact_div(LaurentPoly(1) - X(1)) ==
        LaurentPoly(1) + X(1));
  CHECK_THROWS_AS(LaurentPoly(1).exact_div(LaurentPoly(1) - X(1)), InexactDivision);
  CHECK_THROWS_AS((X(1) + X(2)).exact_div(LaurentPoly(2)), InexactDivision);
  CHECK_THROWS_AS(X(1).exact_div(LaurentPoly(0)), InexactDivision);
  // Laurent divisor with negative exponents
  CHECK((X(1) - Xp(1, -1)).exact_div(LaurentPoly(1) - Xp(1, -1)) == LaurentPoly(1) + X(1) - 0);
}

TEST_CASE("asym and sym small cases") {
  CHECK(asym(X(2), 2) == X(2) - X(1));
  CHECK(asym(X(2) * Xp(3, 2), 3) == vandermonde(3));
  CHECK(asym(X(1) * X(2), 2) == LaurentPoly(0));

  CHECK(sym(X(1), 2) == X(1) + X(2));
  CHECK(sym(LaurentPoly(1), 2) == LaurentPoly(2));
  CHECK(sym(X(1) * Xp(2, -1), 2) == X(1) * Xp(2, -1) + X(2) * Xp(1, -1));
}

TEST_CASE("asym properties", "[property]") {
  std::mt19937 rng(20240811);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      Monomial m = random_x_monomial(rng, n, -3, 4);
      LaurentPoly a = asym(LaurentPoly::term(m, 1), n);
      // alternating: any transposition negates
      for (int i = 1; i < n; ++i) {
        std::vector<int> xs = first_n_xs(n);
        std::swap(xs[static_cast<size_t>(i - 1)], xs[static_cast<size_t>(i)]);
        auto to = std::array<int, kNumVars>{};
        for (int v = 0; v < kNumVars; ++v) to[static_cast<size_t>(v)] = v;
        to[static_cast<size_t>(var::X(i))] = var::X(i + 1);
        to[static_cast<size_t>(var::X(i + 1))] = var::X(i);
        CHECK(relabel_vars(a, to) == -a);
      }
      // divisible by the Vandermonde product
      if (!a.is_zero()) {
        LaurentPoly q = a.exact_div(vandermonde(n));
        CHECK(q * vandermonde(n) == a);
      }
    }
  }
}

TEST_CASE("determinants") {
  LaurentPoly p = X(1) + LaurentPoly::variable(var::t);
  CHECK(det({{p}}) == p);
  CHECK(det({{LaurentPoly(1), X(1)}, {X(1), LaurentPoly(1)}}) == LaurentPoly(1) - X(1) * X(1));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int n = 2; n <= 4; ++n) {
    PolyMatrix m(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
    for (auto& row : m)
      for (auto& e : row) {
        e = LaurentPoly(coeff(rng));
        e += LaurentPoly(coeff(rng)) * X(1 + (coeff(rng) + 2) % n);
      }
    CHECK(det(m) == det_by_permutations(m));
  }
  PolyMatrix too_big(9, std::vector<LaurentPoly>(9, LaurentPoly(1)));
  CHECK_THROWS_AS(det(too_big), std::invalid_argument);
}

TEST_CASE("complete homogeneous including the negative-index extension") {
  CHECK(complete_homog(2, {X(1), X(2)}) == X(1) * X(1) + X(1) * X(2) + X(2) * X(2));
  CHECK(complete_homog(-1, {X(1), X(2)}) == LaurentPoly(0));
  CHECK(complete_homog(-3, {X(1)}) == Xp(1, -3));
  CHECK(complete_homog(0, {X(1)}) == LaurentPoly(1));
  CHECK_THROWS_AS(complete_homog(-4, {X(1) + 1, X(2)}), NonInvertibleArgument);

  // reciprocity holds for every k in range (not only k <= -n)
  for (int n = 1; n <= 4; ++n) {
    std::vector<LaurentPoly> args, inv_args;
    LaurentPoly prefix(1);
    for (int i = 1; i <= n; ++i) {
      args.push_back(X(i));
      inv_args.push_back(Xp(i, -1));
      prefix *= Xp(i, -1);
    }
    for (long k = -2 * n; k <= 2 * n; ++k) {
      LaurentPoly lhs = complete_homog(k, args);
      LaurentPoly rhs = prefix * complete_homog(-k - n, inv_args);
      if (n % 2 == 0) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("series expansion") {
  Series s = series_expand({}, {LaurentPoly(1) - X(1)}, 3);
  CHECK(s.poly() == LaurentPoly(1) + X(1) + Xp(1, 2) + Xp(1, 3));

  Series s2 = series_expand({}, {LaurentPoly(1) - X(1) * X(2)}, 3);
  CHECK(s2.poly() == LaurentPoly(1) + X(1) * X(2));

  LaurentPoly qx = LaurentPoly::variable(var::Q) + X(1);
  Series s3 = series_expand({}, {qx}, 1);
  LaurentPoly expect = LaurentPoly::variable(var::Q, -1) -
                       X(1) * LaurentPoly::variable(var::Q, -2);
  CHECK(s3.poly() == expect);
  // multiply back: congruent to 1 modulo the cap
  Series back = s3 * Series::from_poly(qx, 4);
  CHECK(back.congruent(Series::from_poly(LaurentPoly(1), back.cap()), 1));

  CHECK_THROWS_AS(series_expand({}, {LaurentPoly(2) - X(1)}, 3), NonExpandableDenominator);
  CHECK_THROWS_AS(series_expand({}, {LaurentPoly(1) - X(1) + X(2)}, 3), NonExpandableDenominator);
}

TEST_CASE("series truncation is a congruence", "[property]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Monomial m = random_x_monomial(rng, 3, 0, 2);
    if (m.x_degree() < 1) continue;
    LaurentPoly mu = LaurentPoly::term(m, 1);
    const int cap = 6;
    Series inv = series_expand({}, {LaurentPoly(1) - mu}, cap);
    Series prod = inv * Series::from_poly(LaurentPoly(1) - mu, cap);
    CHECK(prod.congruent(Series::from_poly(LaurentPoly(1), cap), cap));
  }
}

TEST_CASE("canonical text and json forms") {
  LaurentPoly p = LaurentPoly::term(Monomial::of(var::X1, -1) * Monomial::of(var::Q, 2), -1) +
                  LaurentPoly(3) * LaurentPoly::variable(var::t) * X(2);
  CHECK(p.to_string() == "-1*X1^-1*Q^2 + 3*X2*t");
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK(LaurentPoly(-7).to_string() == "-7");

  auto js = poly_to_json(p);
  REQUIRE(js.size() == 2);
  CHECK(js[0]["coeff"] == "-1");
  CHECK(js[0]["exps"]["X1"] == -1);
  CHECK(js[0]["exps"]["Q"] == 2);
}
