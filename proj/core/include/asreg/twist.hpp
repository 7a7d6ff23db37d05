#pragma once

#include "asreg/groebner.hpp"
#include "asreg/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace asreg {

struct TwistSpec {
  AlgebraPresentation base;
  AutomorphismSpec sigma;
};

/// The graded twist A^sigma, a * b = sigma^{|b|}(a) b, on the same
/// generators. Degree by degree up to the top relation degree the kernel of
/// free words -> A_n under the twisted product, reduced modulo the relations
/// already emitted, becomes new monic relations in deglex echelon form.
/// Throws InvalidPresentation when sigma is not an automorphism and
/// CapExceeded when `cap` is below the top relation degree.
AlgebraPresentation graded_twist(const TwistSpec& spec, int cap);

/// The twisted product of normal words, as an element of A.
NcPoly star_product(const QuotientAlgebra& A, const AutomorphismSpec& sigma,
                    const Word& w);

struct TwistCheck {
  std::vector<std::size_t> base_hilbert;
  std::vector<std::size_t> twisted_hilbert;
  std::map<std::pair<int, int>, int> base_betti;
  std::map<std::pair<int, int>, int> twisted_betti;

  bool hilbert_equal() const { return base_hilbert == twisted_hilbert; }
  bool betti_equal() const { return base_betti == twisted_betti; }
  bool ok() const { return hilbert_equal() && betti_equal(); }
};

/// Hilbert dimensions and Betti tables of A and A^sigma up to the caps.
TwistCheck twist_roundtrip_check(const AlgebraPresentation& base,
                                 const AutomorphismSpec& sigma,
                                 int cap_internal, int cap_homological);

} // namespace asreg
