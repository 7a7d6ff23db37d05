#include "asreg/errors.hpp"
#include "asreg/nakayama.hpp"
#include "asreg/twist.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace asreg;
using namespace asreg::test;

namespace {

AutomorphismSpec diag(const AlgebraPresentation& p, std::vector<Scalar> c) {
  return AutomorphismSpec::diagonal(c, p.generator_degrees());
}

std::vector<std::string> rels(const AlgebraPresentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations)
    out.push_back(r.to_string(p.generator_names()));
  return out;
}

const char* kHeisenberg =
    "field Q; gen x 1; gen y 1; rel x*x*y - 2*x*y*x + y*x*x; "
    "rel x*y*y - 2*y*x*y + y*y*x";

} // namespace

TEST(Twist, DiagonalTwistOfPolynomialRing) {
  auto p = parse_presentation(kPoly2);
  auto t = graded_twist({p, diag(p, {q(2), q(3)})}, 6);
  ASSERT_EQ(t.relations.size(), 1u);
  EXPECT_EQ(t.relations[0],
            parse_polynomial("y*x - 3/2*x*y", p.field, p.generators));
  auto t2 = graded_twist({p, diag(p, {q(5), q(1)})}, 6);
  EXPECT_EQ(t2.relations[0],
            parse_polynomial("y*x - 1/5*x*y", p.field, p.generators));
}

TEST(Twist, IdentityTwistKeepsIdeal) {
  for (const char* t : {kPoly3, kJordan, kHeisenberg}) {
    auto p = parse_presentation(t);
    auto tw = graded_twist(
        {p, AutomorphismSpec::identity(p.field, p.generator_degrees())}, 6);
    QuotientAlgebra a(p, 6), b(tw, 6);
    EXPECT_EQ(a.groebner().rules.size(), b.groebner().rules.size()) << t;
    for (std::size_t i = 0; i < a.groebner().rules.size(); ++i)
      EXPECT_EQ(a.groebner().rules[i].poly, b.groebner().rules[i].poly) << t;
  }
}

TEST(Twist, UntwistQuantumPlane) {
  auto p = parse_presentation(kQPlane2);
  auto t = graded_twist({p, diag(p, {q(1), q(1, 2)})}, 6);
  ASSERT_EQ(t.relations.size(), 1u);
  EXPECT_EQ(t.relations[0],
            parse_polynomial("y*x - x*y", p.field, p.generators));
}

TEST(Twist, StarProductOnWords) {
  auto A = algebra(kPoly2);
  auto s = diag(A->presentation(), {q(2), q(3)});
  const auto& d = A->degrees();
  EXPECT_EQ(star_product(*A, s, Word::from_letters({0, 1}, d)),
            poly(*A, "2*x*y"));
  EXPECT_EQ(star_product(*A, s, Word::from_letters({1, 0}, d)),
            poly(*A, "3*x*y"));
  // ((x * x) * x) = sigma^2(x) sigma(x) x
  EXPECT_EQ(star_product(*A, s, Word::from_letters({0, 0, 0}, d)),
            poly(*A, "8*x^3"));
}

TEST(Twist, ChainedDiagonalTwists) {
  auto p = parse_presentation(kQPlane2);
  Scalar a = q(7);
  auto t1 = graded_twist({p, diag(p, {a, q(1)})}, 6);
  auto t12 = graded_twist({t1, diag(t1, {q(1), a})}, 6);
  auto direct = graded_twist({p, diag(p, {a, a})}, 6);
  EXPECT_EQ(rels(t12), rels(direct));
  EXPECT_EQ(rels(direct), rels(p));
}

TEST(Twist, HilbertAndBettiInvariant) {
  struct Case {
    const char* text;
    std::vector<std::string> images;
  };
  for (const auto& c :
       {Case{kPoly2, {"2*x", "3*y"}}, Case{kPoly3, {"x", "2*y", "-z"}},
        Case{kJordan, {"x", "y + x"}}, Case{kJordan, {"3*x", "3*y"}},
        Case{kHeisenberg, {"x", "-y"}}, Case{kQPlane2, {"y", "x"}}}) {
    auto p = parse_presentation(c.text);
    AutomorphismSpec s;
    s.name = "s";
    for (const auto& e : c.images)
      s.images.push_back(parse_polynomial(e, p.field, p.generators));
    QuotientAlgebra A(p, 4);
    if (!check_is_automorphism(s, p, A)) {
      EXPECT_THROW(graded_twist({p, s}, 6), InvalidPresentation) << c.text;
      continue;
    }
    auto check = twist_roundtrip_check(p, s, 7, 5);
    EXPECT_TRUE(check.hilbert_equal()) << c.text;
    EXPECT_TRUE(check.betti_equal()) << c.text;
  }
}

TEST(Twist, TwistedAlgebrasHaveTrivialHdet) {
  std::mt19937 rng(51);
  std::uniform_int_distribution<long> pick(1, 4);
  for (const char* t : {kPoly2, kPoly3, kQPlane2, kHeisenberg}) {
    auto p = parse_presentation(t);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<Scalar> c;
      for (std::size_t g = 0; g < p.generators.size(); ++g)
        c.push_back(q(pick(rng) * (trial == 0 ? 1 : -1), pick(rng)));
      auto tw = graded_twist({p, diag(p, c)}, 7);
      auto A = std::make_shared<const QuotientAlgebra>(tw, 7);
      auto P = minimal_resolution(A, 7, 5);
      auto sig = gorenstein_signature(P);
      ASSERT_TRUE(sig.regular) << t;
      ExtAlgebra E = ext_basis(P);
      compute_products(E, P);
      auto mu = nakayama_of_E(E, frobenius_form(E));
      auto res = nakayama_verdicts(P, sig, E, mu);
      ASSERT_TRUE(res.hdet_mu) << t;
      EXPECT_TRUE(res.hdet_mu->is_one()) << t;
      for (const auto& v : res.verdicts)
        EXPECT_NE(v.status, VerdictStatus::Fail) << t << " " << v.name;
    }
  }
}

TEST(Twist, Errors) {
  auto p = parse_presentation(kHeisenberg);
  EXPECT_THROW(graded_twist({p, diag(p, {q(1), q(1)})}, 2), CapExceeded);
  auto j = parse_presentation(kJordan);
  EXPECT_THROW(graded_twist({j, diag(j, {q(1), q(2)})}, 4),
               InvalidPresentation);
}
