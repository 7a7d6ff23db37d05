#include "asreg/twist.hpp"

#include "asreg/errors.hpp"
#include "asreg/linalg.hpp"
#include "asreg/resolution.hpp"

#include <algorithm>
#include <memory>

namespace asreg {

NcPoly star_product(const QuotientAlgebra& A, const AutomorphismSpec& sigma,
                    const Word& w) {
  const Field F = A.field();
  const auto& degs = A.degrees();
  NcPoly acc = NcPoly::constant(F, Scalar::one(F));
  for (Letter g : w.letters()) {
    for (int k = 0; k < degs[g]; ++k)
      acc = A.reduce(apply_automorphism(sigma, acc));
    acc = A.multiply(acc, A.generator(g));
  }
  return acc;
}

AlgebraPresentation graded_twist(const TwistSpec& spec, int cap) {
  const AlgebraPresentation& base = spec.base;
  const int top = base.max_relation_degree();
  if (top > cap)
    throw CapExceeded("twist", "relations reach degree " +
                                   std::to_string(top) + " beyond cap " +
                                   std::to_string(cap));
  QuotientAlgebra A(base, std::max(cap, 1));
  if (!check_is_automorphism(spec.sigma, base, A))
    throw InvalidPresentation("'" + spec.sigma.name +
                              "' is not a graded automorphism of A");
  const Field F = base.field;
  const std::vector<int> degs = base.generator_degrees();

  AlgebraPresentation out;
  out.field = F;
  out.generators = base.generators;
  out.caps = base.caps;

  for (int n = 1; n <= top; ++n) {
    std::vector<Word> words = free_words_of_degree(n, degs);
    if (words.empty())
      continue;
    std::sort(words.begin(), words.end(),
              [](const Word& a, const Word& b) { return DeglexLess{}(b, a); });
    std::vector<Vec> cols;
    for (const auto& w : words)
      cols.push_back(A.coordinates(star_product(A, spec.sigma, w), n));
    Matrix m = Matrix::from_columns(F, A.dim(n), cols);
    std::vector<Vec> kernel = kernel_basis(m);
    if (kernel.empty())
      continue;

    std::unique_ptr<QuotientAlgebra> sofar;
    if (!out.relations.empty())
      sofar = std::make_unique<QuotientAlgebra>(out, n);
    std::vector<NcPoly> reduced;
    for (const auto& k : kernel) {
      NcPoly p(F);
      for (std::size_t t = 0; t < words.size(); ++t)
        if (!k[t].is_zero())
          p += NcPoly::monomial(k[t], words[t]);
      if (sofar)
        p = sofar->reduce(p);
      if (!p.is_zero())
        reduced.push_back(std::move(p));
    }
    if (reduced.empty())
      continue;
    // rows over words in descending deglex, so pivots are leading words
    Matrix e(F, reduced.size(), words.size());
    for (std::size_t r = 0; r < reduced.size(); ++r)
      for (std::size_t t = 0; t < words.size(); ++t)
        e(r, t) = reduced[r].coefficient(words[t]);
    auto pivots = rref(e);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      NcPoly p(F);
      for (std::size_t t = 0; t < words.size(); ++t)
        if (!e(r, t).is_zero())
          p += NcPoly::monomial(e(r, t), words[t]);
      out.relations.push_back(std::move(p));
    }
  }
  out.validate();
  return out;
}

TwistCheck twist_roundtrip_check(const AlgebraPresentation& base,
                                 const AutomorphismSpec& sigma,
                                 int cap_internal, int cap_homological) {
  AlgebraPresentation tw = graded_twist({base, sigma}, cap_internal);
  auto A = std::make_shared<const QuotientAlgebra>(base, cap_internal);
  auto B = std::make_shared<const QuotientAlgebra>(tw, cap_internal);
  TwistCheck c;
  for (int n = 0; n <= cap_internal; ++n) {
    c.base_hilbert.push_back(A->dim(n));
    c.twisted_hilbert.push_back(B->dim(n));
  }
  c.base_betti =
      betti_table(minimal_resolution(A, cap_internal, cap_homological));
  c.twisted_betti =
      betti_table(minimal_resolution(B, cap_internal, cap_homological));
  return c;
}

} // namespace asreg
