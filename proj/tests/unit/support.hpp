#pragma once

#include "asreg/complexes.hpp"
#include "asreg/groebner.hpp"
#include "asreg/presentation.hpp"

#include <memory>
#include <random>
#include <string>

namespace asreg::test {

inline std::shared_ptr<const QuotientAlgebra> algebra(const std::string& text,
                                                      int cap = 8) {
  return std::make_shared<const QuotientAlgebra>(parse_presentation(text),
                                                 cap);
}

inline NcPoly poly(const QuotientAlgebra& A, const std::string& expr) {
  return parse_polynomial(expr, A.field(), A.presentation().generators);
}

inline Scalar q(long n, long d = 1) {
  return Scalar(Field::rationals(), mpq_class(n, d));
}

inline const char* kPoly2 = "field Q; gen x 1; gen y 1; rel y*x - x*y";
inline const char* kPoly3 =
    "field Q; gen x 1; gen y 1; gen z 1; rel y*x - x*y; rel z*x - x*z; "
    "rel z*y - y*z";
inline const char* kQPlane2 = "field Q; gen x 1; gen y 1; rel y*x - 2*x*y";
inline const char* kJordan = "field Q; gen x 1; gen y 1; rel y*x - x*y - x^2";

inline NcPoly random_element(const QuotientAlgebra& A, int n,
                             std::mt19937& rng) {
  NcPoly out(A.field());
  if (n < 0)
    return out;
  std::uniform_int_distribution<long> coef(-2, 2);
  for (const auto& w : A.basis(n))
    out += NcPoly::monomial(Scalar(A.field(), coef(rng)), w);
  return out;
}

inline ModuleMap random_module_map(const QuotientAlgebra& A,
                                   const GradedFreeModule& src,
                                   const GradedFreeModule& tgt, int shift,
                                   std::mt19937& rng) {
  ModuleMap m(A.field(), src, tgt, shift);
  for (std::size_t r = 0; r < src.rank(); ++r)
    for (std::size_t c = 0; c < tgt.rank(); ++c)
      m.set_entry(r, c,
                  random_element(A,
                                 src.generator_degrees[r] + shift -
                                     tgt.generator_degrees[c],
                                 rng));
  return m;
}

/// Arbitrary graded map X -> Sigma^i T^j Y, not necessarily a chain map.
inline ChainMap random_graded_map(std::shared_ptr<const ChainComplex> X,
                                  std::shared_ptr<const ChainComplex> Y,
                                  int i, int j, std::mt19937& rng) {
  ChainMap f;
  f.source = X;
  f.target = Y;
  f.shift_i = i;
  f.shift_j = j;
  for (int p : X->positions())
    if (Y->has_term(p + i))
      f.set_component(p, random_module_map(X->algebra(), X->term(p),
                                            Y->term(p + i), j, rng));
  return f;
}

/// d h + (-1)^i h d for h of shift (i - 1, j): a null-homotopic chain map.
inline ChainMap boundary_of(const ChainMap& h) {
  const QuotientAlgebra& A = h.source->algebra();
  const int i = h.shift_i + 1;
  Scalar sign(A.field(), i % 2 == 0 ? 1L : -1L);
  ChainMap f;
  f.source = h.source;
  f.target = h.target;
  f.shift_i = i;
  f.shift_j = h.shift_j;
  for (int p : h.source->positions()) {
    if (!h.target->has_term(p + i))
      continue;
    ModuleMap a = compose(A, h.target->differential(p + i - 1), h.component(p));
    ModuleMap b = compose(A, h.component(p + 1), h.source->differential(p));
    f.set_component(p, a + b * sign);
  }
  return f;
}

} // namespace asreg::test
