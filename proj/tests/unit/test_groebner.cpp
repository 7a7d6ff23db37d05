#include "asreg/errors.hpp"
#include "asreg/groebner.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace asreg;

namespace {

std::vector<std::string> lead_strings(const QuotientAlgebra& A) {
  std::vector<std::string> out;
  auto names = A.presentation().generator_names();
  for (const auto& r : A.groebner().rules)
    out.push_back(r.poly.to_string(names));
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST(ComputeGb, QuantumPlaneSingleRule) {
  auto A = test::algebra(test::kQPlane2, 10);
  EXPECT_EQ(lead_strings(*A), (std::vector<std::string>{"y*x - 2*x*y"}));
}

TEST(ComputeGb, PolynomialRingThreeVariables) {
  auto A = test::algebra(test::kPoly3, 8);
  EXPECT_EQ(lead_strings(*A),
            (std::vector<std::string>{"y*x - x*y", "z*x - x*z", "z*y - y*z"}));
}

TEST(ComputeGb, FreeAlgebraHasNoRules) {
  auto A = test::algebra("field Q; gen x 1; gen y 1", 6);
  EXPECT_TRUE(A->groebner().rules.empty());
}

TEST(ComputeGb, TruncationIsConsistentAcrossCaps) {
  for (const char* text :
       {test::kJordan, "field Q; gen x 1; gen y 1; rel x*y*x - y*x*x",
        "field Q; gen x 1; gen y 1; rel x*x*y - 2*x*y*x + y*x*x; "
        "rel y*y*x - 2*y*x*y + x*y*y",
        "field Q; gen x 1; gen y 1; gen z 1; rel z*y - y*z - x*x; "
        "rel z*x - x*z; rel y*x - x*y"}) {
    auto lo = test::algebra(text, 5);
    auto hi = test::algebra(text, 9);
    std::vector<RewriteRule> hi_low;
    for (const auto& r : hi->groebner().rules)
      if (r.lead.degree() <= 5)
        hi_low.push_back(r);
    ASSERT_EQ(hi_low.size(), lo->groebner().rules.size()) << text;
    for (std::size_t k = 0; k < hi_low.size(); ++k)
      EXPECT_EQ(hi_low[k].poly, lo->groebner().rules[k].poly);
    EXPECT_EQ(hilbert_dims(lo->groebner(), 5), hilbert_dims(hi->groebner(), 5));
  }
}

TEST(ComputeGb, InfiniteBasisTruncatedAtCap) {
  // yy -> xy; the self-overlap yyy yields y x^n y -> x^{n+1} y in every
  // degree, so the completion never stops and is cut at the cap.
  auto A = test::algebra("field Q; gen x 1; gen y 1; rel y*y - x*y", 8);
  auto names = A->presentation().generator_names();
  std::vector<std::string> rules;
  for (const auto& r : A->groebner().rules)
    rules.push_back(r.poly.to_string(names));
  EXPECT_EQ(rules, (std::vector<std::string>{
                       "y*y - x*y", "y*x*y - x*x*y", "y*x*x*y - x*x*x*y",
                       "y*x*x*x*y - x*x*x*x*y", "y*x*x*x*x*y - x*x*x*x*x*y",
                       "y*x*x*x*x*x*y - x*x*x*x*x*x*y",
                       "y*x*x*x*x*x*x*y - x*x*x*x*x*x*x*y"}));
  EXPECT_EQ(A->groebner().complete_to_degree, 8);
}

TEST(ComputeGb, LeadsMutuallyIrreducible) {
  for (const char* text :
       {test::kPoly3, test::kJordan,
        "field Q; gen x 1; gen y 1; rel x*x*y - 2*x*y*x + y*x*x; "
        "rel y*y*x - 2*y*x*y + x*y*y",
        "field Q; gen x 1; gen y 1; rel x*y*x - y*x*x"}) {
    auto A = test::algebra(text, 8);
    const auto& rules = A->groebner().rules;
    for (const auto& a : rules) {
      EXPECT_TRUE(a.poly.leading_term().second.is_one());
      EXPECT_EQ(a.poly.leading_term().first, a.lead);
      for (const auto& b : rules) {
        if (&a == &b)
          continue;
        const auto& la = a.lead.letters();
        const auto& lb = b.lead.letters();
        EXPECT_EQ(std::search(lb.begin(), lb.end(), la.begin(), la.end()),
                  lb.end())
            << "lead contained in another lead";
      }
    }
  }
}

TEST(NormalForm, Examples) {
  auto A = test::algebra(test::kQPlane2);
  EXPECT_EQ(A->reduce(test::poly(*A, "y*x")), test::poly(*A, "2*x*y"));
  EXPECT_TRUE(A->reduce(test::poly(*A, "y*x - 2*x*y")).is_zero());
  auto B = test::algebra(test::kPoly2);
  EXPECT_EQ(B->reduce(test::poly(*B, "y*x*y")), test::poly(*B, "x*y*y"));
  EXPECT_EQ(normal_form(test::poly(*B, "y*x*y"), B->groebner()),
            test::poly(*B, "x*y*y"));
}

TEST(NormalForm, BeyondCapThrows) {
  auto A = test::algebra(test::kPoly2, 3);
  EXPECT_THROW(A->reduce(test::poly(*A, "x^4")), CapExceeded);
  EXPECT_THROW(normal_form(test::poly(*A, "x^4"), A->groebner()), CapExceeded);
  EXPECT_THROW(A->basis(4), CapExceeded);
}

TEST(HilbertDims, Examples) {
  auto qp = test::algebra(test::kQPlane2, 8);
  EXPECT_EQ(hilbert_dims(qp->groebner(), 5),
            (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  auto p3 = test::algebra(test::kPoly3, 8);
  EXPECT_EQ(hilbert_dims(p3->groebner(), 4),
            (std::vector<std::size_t>{1, 3, 6, 10, 15}));
  auto fr = test::algebra("field Q; gen x 1; gen y 1", 6);
  EXPECT_EQ(hilbert_dims(fr->groebner(), 5),
            (std::vector<std::size_t>{1, 2, 4, 8, 16, 32}));
  EXPECT_THROW(hilbert_dims(fr->groebner(), 7), CapExceeded);
}

TEST(HilbertDims, CommutativeBinomialClosedForm) {
  auto A = test::algebra(
      "field Q; gen a 1; gen b 1; gen c 1; gen d 1; rel b*a - a*b; "
      "rel c*a - a*c; rel d*a - a*d; rel c*b - b*c; rel d*b - b*d; "
      "rel d*c - c*d",
      7);
  auto dims = hilbert_dims(A->groebner(), 7);
  for (std::size_t n = 0; n <= 7; ++n)
    EXPECT_EQ(dims[n], binom(n + 3, 3));
}

TEST(HilbertDims, JordanAndCubic) {
  auto J = test::algebra(test::kJordan, 8);
  EXPECT_EQ(hilbert_dims(J->groebner(), 6),
            (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}));
  auto H = test::algebra(
      "field Q; gen x 1; gen y 1; rel x*x*y - 2*x*y*x + y*x*x; "
      "rel y*y*x - 2*y*x*y + x*y*y",
      9);
  // (1 - t)^{-2} (1 - t^2)^{-1}
  EXPECT_EQ(hilbert_dims(H->groebner(), 8),
            (std::vector<std::size_t>{1, 2, 4, 6, 9, 12, 16, 20, 25}));
}

TEST(HilbertDims, IndependentOfGeneratorOrder) {
  auto a = test::algebra(test::kJordan, 8);
  auto b = test::algebra("field Q; gen y 1; gen x 1; rel y*x - x*y - x^2", 8);
  EXPECT_EQ(hilbert_dims(a->groebner(), 8), hilbert_dims(b->groebner(), 8));
  auto c = test::algebra(
      "field Q; gen x 1; gen y 1; rel x*x*y - 2*x*y*x + y*x*x; "
      "rel y*y*x - 2*y*x*y + x*y*y",
      8);
  auto d = test::algebra(
      "field Q; gen y 1; gen x 1; rel x*x*y - 2*x*y*x + y*x*x; "
      "rel y*y*x - 2*y*x*y + x*y*y",
      8);
  EXPECT_EQ(hilbert_dims(c->groebner(), 8), hilbert_dims(d->groebner(), 8));
  auto e = test::algebra("field Q; gen x 1; gen y 2; rel y*x - x*y", 8);
  auto f = test::algebra("field Q; gen y 2; gen x 1; rel y*x - x*y", 8);
  EXPECT_EQ(hilbert_dims(e->groebner(), 8), hilbert_dims(f->groebner(), 8));
}

TEST(BasisOfDegree, Examples) {
  auto A = test::algebra(test::kQPlane2);
  auto names = A->presentation().generator_names();
  std::vector<std::string> b2;
  for (const auto& w : basis_of_degree(A->groebner(), 2))
    b2.push_back(NcPoly::monomial(Scalar::one(A->field()), w).to_string(names));
  EXPECT_EQ(b2, (std::vector<std::string>{"x*x", "x*y", "y*y"}));
  EXPECT_EQ(basis_of_degree(A->groebner(), 0).size(), 1u);
  EXPECT_TRUE(basis_of_degree(A->groebner(), 0)[0].empty());
  auto B = test::algebra(test::kPoly2);
  EXPECT_EQ(B->basis(1).size(), 2u);
}

TEST(NormalFormProperty, IdempotentLinearMultiplicative) {
  std::mt19937 rng(4242);
  for (const char* text : {test::kJordan, test::kQPlane2, test::kPoly3}) {
    auto A = test::algebra(text, 8);
    std::size_t g = A->num_generators();
    std::uniform_int_distribution<int> coef(-3, 3), len(0, 4);
    std::uniform_int_distribution<std::size_t> letter(0, g - 1);
    auto rand_poly = [&] {
      NcPoly p(A->field());
      for (int t = 0; t < 4; ++t) {
        std::vector<Letter> l;
        for (int k = len(rng); k > 0; --k)
          l.push_back(static_cast<Letter>(letter(rng)));
        p.add_term(Word::from_letters(l, A->degrees()),
                   Scalar(A->field(), coef(rng)));
      }
      return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
      NcPoly a = rand_poly(), b = rand_poly();
      NcPoly na = A->reduce(a);
      ASSERT_EQ(A->reduce(na), na);
      ASSERT_EQ(A->reduce(a + b), na + A->reduce(b));
      ASSERT_EQ(A->reduce(a * b), A->reduce(na * A->reduce(b)));
      ASSERT_EQ(normal_form(a, A->groebner()), na);
    }
  }
}
