#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "littlewood/identities.hpp"

using namespace littlewood;

namespace {
const LaurentPoly Q = LaurentPoly::variable(var::Q);
const LaurentPoly R = LaurentPoly::variable(var::r);
const LaurentPoly W = LaurentPoly::variable(var::w);
}  // namespace

TEST_CASE("a-entry basics") {
  // (j,m,n) = (1,0,1): the whole entry collapses to Q - X^2
  CHECK(a_entry_cleared(1, 0, 1, 1) == Q - xvar_pow(1, 2));

  // j = n: the (Q + rX + QX) factor is empty in the first term
  LaurentPoly X = xvar(1);
  LaurentPoly first_term_expected =
      (LaurentPoly(1) + Q * xvar_pow(1, -1)) * xvar_pow(1, 2) * (LaurentPoly(1) + X);
  LaurentPoly e = a_entry_cleared(2, 0, 2, 1);
  // recover term1 by adding the (perturbed) flip of term2
  LaurentPoly term1 = (e + a_entry_cleared(2, 0, 2, 1, APerturb::FlipSecond));
  CHECK(term1 == LaurentPoly(2) * first_term_expected);

  // X -> Q/X maps term 1 onto term 2 up to X^{2n} Q^{-n} ((1+X)X/(Q+X))^m
  const int j = 1, m = 1, n = 2;
  LaurentPoly t1 = (a_entry_cleared(j, m, n, 1) + a_entry_cleared(j, m, n, 1, APerturb::FlipSecond));
  LaurentPoly t2 = (a_entry_cleared(j, m, n, 1, APerturb::FlipFirst) + a_entry_cleared(j, m, n, 1));
  // t1 = 2*term1*(Q+X)^m etc.; remove the common factor 2
  t1 = t1.exact_div(LaurentPoly(2));
  t2 = (-t2).exact_div(LaurentPoly(2));
  // term1(Q/X) * X^{2n} Q^{-n} ((1+X)X)^m == term2 * (Q+X)^m, cleared forms:
  // t1 here is term1*(Q+X)^m, so substitute first, then fix the cleared factor.
  LaurentPoly raw1 = t1.exact_div((Q + xvar(1)).pow(m));
  LaurentPoly sub = raw1.substitute(var::X1, Q * xvar_pow(1, -1));
  LaurentPoly lhs = sub * xvar_pow(1, 2 * n) * LaurentPoly::variable(var::Q, -n) *
                    ((LaurentPoly(1) + xvar(1)) * xvar(1)).pow(m);
  CHECK(lhs == t2);
}

TEST_CASE("bounded rQ identity at small sizes") {
  for (auto [n, m] : {std::pair<int, int>{1, 0}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    IdentityReport rep = verify_boundedrQ(n, m);
    INFO("n=" << n << " m=" << m);
    CHECK(rep.verified);
    CHECK_FALSE(rep.first_mismatch.has_value());
  }
}

TEST_CASE("perturbing either sign breaks the identity with a reported mismatch") {
  for (APerturb p : {APerturb::FlipFirst, APerturb::FlipSecond}) {
    IdentityReport rep = verify_boundedrQ(2, 2, p);
    CHECK_FALSE(rep.verified);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->lhs != rep.first_mismatch->rhs);
  }
}

TEST_CASE("w-deformed bounded identity and its substitution chain") {
  for (auto [n, m] : {std::pair<int, int>{1, 0}, {2, 2}, {2, 3}, {3, 1}}) {
    IdentityReport rep = verify_rincluded(n, m);
    INFO("n=" << n << " m=" << m);
    CHECK(rep.verified);
  }
  for (auto [n, m] : {std::pair<int, int>{1, 1}, {2, 2}, {2, 3}}) {
    IdentityReport rep = verify_rincluded(n, m, RincludedForm::Normalized);
    INFO("n=" << n << " m=" << m);
    CHECK(rep.verified);
  }
}

TEST_CASE("bounded classical Littlewood") {
  for (auto [n, m] : {std::pair<int, int>{1, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    IdentityReport rep = verify_macdonald(n, m);
    INFO("n=" << n << " m=" << m);
    CHECK(rep.verified);
  }
}

TEST_CASE("unbounded identities as truncated series") {
  CHECK(verify_unbounded(UnboundedVariant::Eq1, 1, 4).verified);
  CHECK(verify_unbounded(UnboundedVariant::Eq1, 2, 4).verified);
  CHECK(verify_unbounded(UnboundedVariant::Eq2, 2, 4).verified);
  CHECK(verify_unbounded(UnboundedVariant::Eq4, 2, 5).verified);
  CHECK(verify_unbounded(UnboundedVariant::Eq3, 2, 4).verified);
  CHECK(verify_unbounded(UnboundedVariant::Eq5, 2, 4).verified);
}

TEST_CASE("setting Q=1 in the Q-deformation recovers the base identity") {
  const int n = 2, cap = 4;
  Series lhs3 = detail::unbounded_lhs(UnboundedVariant::Eq3, n, cap);
  Series lhs2 = detail::unbounded_lhs(UnboundedVariant::Eq2, n, cap);
  Series rhs3 = detail::unbounded_rhs_times_vandermonde(UnboundedVariant::Eq3, n, cap);
  Series rhs2 = detail::unbounded_rhs_times_vandermonde(UnboundedVariant::Eq2, n, cap);
  Series lhs3q1 = Series::from_poly(lhs3.poly().substitute(var::Q, LaurentPoly(1)), lhs3.cap());
  Series rhs3q1 = Series::from_poly(rhs3.poly().substitute(var::Q, LaurentPoly(1)), rhs3.cap());
  CHECK(lhs3q1.congruent(lhs2, cap));
  CHECK(rhs3q1.congruent(rhs2, cap));
}

TEST_CASE("the m->infinity identity") {
  CHECK(verify_infinite(1, 4).verified);
  CHECK(verify_infinite(2, 4).verified);
}

TEST_CASE("the recursion's polynomial identity") {
  // n=1: both sides are Q - X1^2
  IdentityReport rep1 = verify_leftright(1);
  CHECK(rep1.verified);
  CHECK(verify_leftright(2).verified);
  CHECK(verify_leftright(3).verified);
}

TEST_CASE("limit lemma on explicit samples") {
  CHECK(verify_lemma_limit({xvar_pow(1, 2)}).verified);
  CHECK(verify_lemma_limit({LaurentPoly(1), xvar(1)}).verified);

  std::mt19937 rng(20250810);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LaurentPoly> fs;
    for (int j = 0; j < 2; ++j) {
      LaurentPoly f;
      for (int t = 0; t < 3; ++t) f += LaurentPoly(c(rng)) * xvar_pow(1, e(rng));
      fs.push_back(f);
    }
    CHECK(verify_lemma_limit(fs).verified);
  }
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<LaurentPoly> fs;
    for (int j = 0; j < 3; ++j) {
      LaurentPoly f;
      for (int t = 0; t < 3; ++t) f += LaurentPoly(c(rng)) * xvar_pow(1, e(rng));
      fs.push_back(f);
    }
    CHECK(verify_lemma_limit(fs).verified);
  }
}

TEST_CASE("h lemma") {
  CHECK(verify_lemma_h(1, 1).verified);
  CHECK(verify_lemma_h(3, 1).verified);
  CHECK(verify_lemma_h(5, 3).verified);
  CHECK(verify_lemma_h(8, 8).verified);
}

TEST_CASE("q-to-b basis transform") {
  CHECK(verify_transform(1).verified);
  LaurentPoly q2 = (xvar_pow(1, 2) - xvar_pow(1, -2)).exact_div(xvar(1) - xvar_pow(1, -1));
  CHECK(q2 == xvar(1) + xvar_pow(1, -1));
  CHECK(verify_transform(2).verified);
  CHECK(verify_transform(6).verified);
  CHECK(verify_transform(10).verified);
}

TEST_CASE("report JSON shape") {
  IdentityReport rep = verify_boundedrQ(1, 0);
  auto j = rep.to_json();
  CHECK(j["identity"] == "boundedrQ");
  CHECK(j["status"] == "verified");
  CHECK(j["first_mismatch"].is_null());
  CHECK(j["cap"] == -1);

  IdentityReport bad = verify_boundedrQ(2, 2, APerturb::FlipFirst);
  auto jb = bad.to_json();
  CHECK(jb["status"] == "failed");
  CHECK(jb["first_mismatch"].is_object());
}
