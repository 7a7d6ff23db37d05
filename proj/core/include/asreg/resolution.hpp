#pragma once

#include "asreg/complexes.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace asreg {

enum class Tri { False, True, Unknown };

std::string to_string(Tri t);

/// Minimal graded free resolution P -> k, terms P^{(-i)} = A (x) V^{(-i)}
/// at positions 0, -1, ..., -length().
class Resolution {
public:
  const QuotientAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const QuotientAlgebra>& algebra_ptr() const {
    return algebra_;
  }
  const std::shared_ptr<const ChainComplex>& complex() const {
    return complex_;
  }

  /// v_degrees()[i] = internal degrees of the V^{(-i)} generators.
  const std::vector<std::vector<int>>& v_degrees() const { return v_degrees_; }
  /// Position of the last nonzero term.
  int length() const { return static_cast<int>(v_degrees_.size()) - 1; }
  /// Some step up to the homological cap produced no new generators.
  bool terminated() const { return terminated_; }
  /// complete()[i]: no V^{(-i)} generator sits at the internal cap.
  const std::vector<bool>& complete() const { return complete_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  int cap_internal() const { return cap_internal_; }
  int cap_homological() const { return cap_homological_; }
  int max_generator_degree() const;

  /// d^{(-i)} : P^{(-i)} -> P^{(-i+1)}, i >= 1.
  ModuleMap differential(int i) const;
  const GradedFreeModule& term(int i) const;

  /// Some y in (P^{(-i)})_n with d^{(-i)} y = b, or nullopt when b is not a
  /// boundary. The particular solution sets free coordinates to zero; with
  /// `perturb` a random kernel element is added.
  std::optional<ModuleElement> lift(int i, int n, const ModuleElement& b,
                                    std::mt19937* perturb = nullptr) const;

private:
  friend Resolution minimal_resolution(std::shared_ptr<const QuotientAlgebra>,
                                       int, int);

  std::shared_ptr<const QuotientAlgebra> algebra_;
  std::shared_ptr<const ChainComplex> complex_;
  std::vector<std::vector<int>> v_degrees_;
  std::vector<bool> complete_;
  std::vector<std::string> warnings_;
  bool terminated_ = false;
  int cap_internal_ = 0;
  int cap_homological_ = 0;
  // solvers_[i][n]: column echelon of d^{(-i)} on the degree-n basis
  std::vector<std::vector<std::shared_ptr<const SpanSolver>>> solvers_;
};

/// Builds V^{(-i)} degree by degree as an echelon complement of
/// A_{>=1} K^{(-i+1)} inside K^{(-i+1)}; earliest coordinates win.
Resolution minimal_resolution(std::shared_ptr<const QuotientAlgebra> algebra,
                              int cap_internal, int cap_homological);

/// (i, internal degree) -> number of V^{(-i)} generators.
std::map<std::pair<int, int>, int> betti_table(const Resolution& P);

struct GorensteinSignature {
  std::optional<int> d;
  std::optional<int> ell;
  bool regular = false;
  Tri gorenstein_ok = Tri::Unknown;
  /// dim H^i(Hom_A(P, A))_m over the computed window, keyed by (i, m).
  std::map<std::pair<int, int>, std::size_t> dual_cohomology;
  int window_low = 0;
  int window_high = 0;
  std::string note;
};

/// Reads Ext^i_A(k, A) off Hom_A(P, A) in internal degrees m with
/// -maxdeg <= m <= cap - maxdeg. Unknown unless the resolution terminated.
GorensteinSignature gorenstein_signature(const Resolution& P);

/// Hom_A(P^{(-i)}, A) in internal degree m: coordinates over the pairs
/// (generator c, normal word of degree d_c + m).
DegreeCoords dual_coords(const Resolution& P, int i, int m);

/// delta^i : Hom(P^{(-i)}, A)_m -> Hom(P^{(-i-1)}, A)_m,
/// (delta psi)(e_c) = sum_r d_{cr} psi(e_r).
Matrix dual_differential(const Resolution& P, int i, int m);

} // namespace asreg
