#pragma once

#include "asreg/extalgebra.hpp"

#include <map>
#include <optional>
#include <string>

namespace asreg {

/// A bidegree-preserving linear endomorphism of E, one block per bidegree;
/// block columns are images of the block's basis vectors.
struct GradedLinearMap {
  std::string name;
  std::map<std::pair<int, int>, Matrix> blocks;

  /// Splits an E.dim() square matrix (columns = images). Throws when the
  /// matrix mixes bidegrees.
  static GradedLinearMap from_matrix(const ExtAlgebra& E, const Matrix& m,
                                     std::string name);
  Matrix to_matrix(const ExtAlgebra& E) const;
  Vec apply(const ExtAlgebra& E, const Vec& v) const;
  /// this o other.
  GradedLinearMap after(const ExtAlgebra& E, const GradedLinearMap& other) const;

  friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
    return a.blocks == b.blocks;
  }
};

struct FrobeniusData {
  std::pair<int, int> top;  // bidegree of the socle
  std::size_t socle_index = 0;
  Vec socle;                // spanning vector
  Scalar scale;             // e(socle basis vector)
  Matrix pairing;           // pairing(a, b) = e(e_a * e_b)
  bool nondegenerate = false;
  /// Pairing restricted to E^{i,j} x E^{d-i,-ell-j}, keyed by (i, j).
  std::map<std::pair<int, int>, Matrix> blocks;
};

/// Socle of E^+ (left and right annihilators must agree and be a line),
/// e = scale * (coordinate on it), and the Gram matrix of (x, y) = e(xy).
/// Throws SocleError.
FrobeniusData frobenius_form(const ExtAlgebra& E,
                             std::optional<Scalar> scale = std::nullopt);

/// mu_E with (x, y) = (mu_E(y), x): Pm^T mu = Pm, so mu = (Pm^T)^{-1} Pm.
/// Throws DegeneratePairing.
GradedLinearMap nakayama_of_E(const ExtAlgebra& E, const FrobeniusData& F);

/// mu_E = xi_{(-1)^{d+1}, 1} with d the top homological degree.
bool is_graded_symmetric(const ExtAlgebra& E, const GradedLinearMap& mu);

/// xi_{a, b} on E: multiplication by a^i b^j on E^{i,j}.
GradedLinearMap xi_automorphism(const ExtAlgebra& E, const Scalar& a,
                                const Scalar& b);

bool is_algebra_automorphism(const ExtAlgebra& E, const GradedLinearMap& f);

} // namespace asreg
