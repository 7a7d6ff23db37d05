#include "asreg/complexes.hpp"
#include "asreg/errors.hpp"
#include "asreg/resolution.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace asreg;
using namespace asreg::test;

namespace {

// 0 -> A(-1) --x--> A -> 0 at positions 0, 1.
std::shared_ptr<const ChainComplex> two_term(
    std::shared_ptr<const QuotientAlgebra> A, const char* entry) {
  ChainComplex X(A);
  X.set_term(0, GradedFreeModule{{1}});
  X.set_term(1, GradedFreeModule{{0}});
  ModuleMap d(A->field(), X.term(0), X.term(1));
  d.set_entry(0, 0, poly(*A, entry));
  X.set_differential(0, d);
  return std::make_shared<const ChainComplex>(std::move(X));
}

std::shared_ptr<const ChainComplex> koszul(
    std::shared_ptr<const QuotientAlgebra> A) {
  return minimal_resolution(A, 6, 4).complex();
}

} // namespace

TEST(Complexes, SigmaNegatesDifferential) {
  auto A = algebra(kPoly2);
  auto X = two_term(A, "x");
  ChainComplex S = shift_sigma(*X);
  EXPECT_EQ(S.term(-1), X->term(0));
  EXPECT_EQ(S.term(0), X->term(1));
  EXPECT_EQ(S.differential(-1).entry(0, 0), poly(*A, "-x"));
  ChainComplex S2 = shift_sigma(S);
  EXPECT_EQ(S2.differential(-2).entry(0, 0), poly(*A, "x"));
  EXPECT_TRUE(shift_sigma(S, -1) == *X);
}

TEST(Complexes, ShiftsPreserveDSquared) {
  auto A = algebra(kPoly3);
  auto P = koszul(A);
  EXPECT_TRUE(P->check_d_squared());
  for (int k : {-2, -1, 1, 3})
    EXPECT_TRUE(shift_sigma(*P, k).check_d_squared());
  ChainComplex T = shift_T(*P, 2);
  EXPECT_TRUE(T.check_d_squared());
  EXPECT_EQ(T.term(-1).generator_degrees, (std::vector<int>{-1, -1, -1}));
  EXPECT_EQ(T.term(-3).generator_degrees, (std::vector<int>{1}));
}

TEST(Complexes, DifferentialShapeChecked) {
  auto A = algebra(kPoly2);
  ChainComplex X(A);
  X.set_term(0, GradedFreeModule{{1}});
  X.set_term(1, GradedFreeModule{{0, 0}});
  ModuleMap d(A->field(), GradedFreeModule{{1}}, GradedFreeModule{{0}});
  EXPECT_THROW(X.set_differential(0, d), ShapeMismatch);
  ModuleMap e(A->field(), GradedFreeModule{{1}}, GradedFreeModule{{0}});
  EXPECT_THROW(e.set_entry(0, 0, poly(*A, "x*y")), ShapeMismatch);
}

TEST(Complexes, NotAComplexDetected) {
  auto A = algebra(kPoly2);
  ChainComplex X(A);
  X.set_term(0, GradedFreeModule{{2}});
  X.set_term(1, GradedFreeModule{{1}});
  X.set_term(2, GradedFreeModule{{0}});
  ModuleMap d0(A->field(), X.term(0), X.term(1));
  d0.set_entry(0, 0, poly(*A, "x"));
  ModuleMap d1(A->field(), X.term(1), X.term(2));
  d1.set_entry(0, 0, poly(*A, "y"));
  X.set_differential(0, d0);
  X.set_differential(1, d1);
  EXPECT_FALSE(X.check_d_squared());
}

TEST(Complexes, IdentityIsUnitForGradedCompose) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ChainMap f = random_graded_map(P, P, 1, -1, rng);
    ChainMap id = identity_map(P);
    ChainMap l = graded_compose(id, f), r = graded_compose(f, id);
    for (int p : P->positions()) {
      EXPECT_TRUE(l.component(p).same_entries(f.component(p)));
      EXPECT_TRUE(r.component(p).same_entries(f.component(p)));
    }
  }
}

TEST(Complexes, GradedComposeSignOnOddShifts) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  std::mt19937 rng(12);
  ChainMap f = random_graded_map(P, P, 1, 0, rng);
  ChainMap g = random_graded_map(P, P, 1, 0, rng);
  ChainMap gf = graded_compose(g, f);
  for (int p : P->positions()) {
    ModuleMap plain = compose(*A, g.component(p + 1), f.component(p));
    EXPECT_TRUE(gf.component(p).same_entries(plain * q(-1)));
  }
}

TEST(Complexes, GradedComposeAssociativeFuzz) {
  auto A = algebra(kPoly3);
  auto P = koszul(A);
  std::mt19937 rng(20240612);
  std::uniform_int_distribution<int> si(-1, 2), sj(-2, 1);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ChainMap f = boundary_of(random_graded_map(P, P, si(rng) - 1, sj(rng), rng));
    ChainMap g = boundary_of(random_graded_map(P, P, si(rng) - 1, sj(rng), rng));
    ChainMap h = random_graded_map(P, P, si(rng), sj(rng), rng);
    ASSERT_TRUE(f.is_chain_map());
    ChainMap l = graded_compose(graded_compose(h, g), f);
    ChainMap r = graded_compose(h, graded_compose(g, f));
    ASSERT_EQ(l.shift_i, r.shift_i);
    for (int p : P->positions())
      ASSERT_TRUE(l.component(p).same_entries(r.component(p))) << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Complexes, ComposeOfChainMapsIsChainMap) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ChainMap f = boundary_of(random_graded_map(P, P, trial % 3 - 1, 0, rng));
    ChainMap g = boundary_of(random_graded_map(P, P, trial % 2, -1, rng));
    EXPECT_TRUE(graded_compose(g, f).is_chain_map());
  }
}

TEST(Complexes, NonChainMapDetected) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  ChainMap f = identity_map(P);
  f.components[-1] = f.components[-1] * q(2);
  EXPECT_FALSE(f.is_chain_map());
  EXPECT_TRUE(identity_map(P).is_chain_map());
}

TEST(Complexes, SigmaOfChainMapIsChainMap) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  std::mt19937 rng(8);
  for (int i : {-1, 0, 1, 2}) {
    ChainMap f = boundary_of(random_graded_map(P, P, i - 1, 0, rng));
    ASSERT_TRUE(f.is_chain_map());
    for (int k : {-1, 1, 2})
      EXPECT_TRUE(shift_sigma_map(f, k).is_chain_map()) << i << " " << k;
    EXPECT_TRUE(shift_T_map(f, 3).is_chain_map());
  }
}

TEST(Complexes, SigmaOfMapSign) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  std::mt19937 rng(9);
  ChainMap f = random_graded_map(P, P, 1, 0, rng);
  ChainMap s = shift_sigma_map(f, 1);
  EXPECT_TRUE(s.component(-2).same_entries(f.component(-1) * q(-1)));
  ChainMap s2 = shift_sigma_map(f, 2);
  EXPECT_TRUE(s2.component(-3).same_entries(f.component(-1)));
}

TEST(Complexes, TSigns) {
  for (int p = -4; p <= 4; ++p) {
    EXPECT_EQ(t1_sign(p), 1);
    EXPECT_EQ(t2_sign(p), p % 2 == 0 ? 1 : -1);
  }
}

TEST(Complexes, HomSuspensionIsomorphisms) {
  auto A = algebra(kPoly2);
  auto X = koszul(A);
  auto Y = two_term(A, "y");
  auto SX = std::make_shared<const ChainComplex>(shift_sigma(*X));
  auto SY = std::make_shared<const ChainComplex>(shift_sigma(*Y));
  std::mt19937 rng(21);
  for (int i = -1; i <= 2; ++i) {
    // h2 o h1 = Sigma^{-1}, on Hom(Sigma X, Sigma Y)
    HomElement f{0, random_graded_map(SX, SY, i, 1, rng)};
    HomElement a = h2(h1(f, X), Y);
    ChainMap expect = shift_sigma_map(f.map, -1);
    EXPECT_EQ(a.suspension, 0);
    EXPECT_EQ(a.degree(), i);
    for (int p : X->positions())
      EXPECT_TRUE(a.map.component(p).same_entries(expect.component(p)));
    // h1 o h2 = -Sigma^{-1}
    HomElement b = h1(h2(f, Y), X);
    for (int p : X->positions())
      EXPECT_TRUE(
          b.map.component(p).same_entries(expect.component(p) * q(-1)));
  }
}

TEST(Complexes, HomSuspensionChecksEndpoints) {
  auto A = algebra(kPoly2);
  auto X = koszul(A);
  std::mt19937 rng(1);
  HomElement f{0, random_graded_map(X, X, 0, 0, rng)};
  EXPECT_THROW(h1(f, X), ShapeMismatch);
  EXPECT_THROW(h2(f, X), ShapeMismatch);
}

TEST(Complexes, HomotopyEqualReflexive) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  auto r = homotopy_equal(identity_map(P), identity_map(P));
  EXPECT_TRUE(r.equal);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->is_zero());
}

TEST(Complexes, HomotopyEqualFindsWitness) {
  auto A = algebra(kQPlane2);
  auto P = koszul(A);
  std::mt19937 rng(33);
  for (int i : {0, 1, 2}) {
    ChainMap h = random_graded_map(P, P, i - 1, 0, rng);
    ChainMap f = boundary_of(h);
    ChainMap g = random_graded_map(P, P, i, 0, rng) * q(0);
    auto r = homotopy_equal(f, g);
    EXPECT_TRUE(r.equal);
    ASSERT_TRUE(r.witness);
    ChainMap back = boundary_of(*r.witness);
    for (int p : P->positions())
      EXPECT_TRUE(back.component(p).same_entries(f.component(p)));
  }
}

TEST(Complexes, IdentityNotNullHomotopic) {
  auto A = algebra(kPoly2);
  auto P = koszul(A);
  ChainMap zero = identity_map(P) * q(0);
  auto r = homotopy_equal(identity_map(P), zero);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.witness);
}
