#pragma once

#include "asreg/freealg.hpp"

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace asreg {

class QuotientAlgebra;

struct Generator {
  std::string name;
  int degree = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A graded algebra endomorphism of the free algebra given by generator
/// images. Each image is homogeneous of its generator's degree.
struct AutomorphismSpec {
  std::string name;
  std::vector<NcPoly> images;

  /// x -> c^{|x|} x on every generator.
  static AutomorphismSpec xi(const Scalar& c, std::span<const int> degrees);
  static AutomorphismSpec identity(Field f, std::span<const int> degrees);
  /// x_g -> c_g x_g.
  static AutomorphismSpec diagonal(std::span<const Scalar> factors,
                                   std::span<const int> degrees);

  friend bool operator==(const AutomorphismSpec&,
                         const AutomorphismSpec&) = default;
};

struct Caps {
  int internal = 10;
  int homological = 5;

  friend bool operator==(const Caps&, const Caps&) = default;
};

/// k<x_1..x_g>/(relations), connected and graded by positive generator
/// degrees, plus optional named automorphisms and truncation caps.
struct AlgebraPresentation {
  Field field;
  std::vector<Generator> generators;
  std::vector<NcPoly> relations;
  /// Declared automorphisms in file order; "mu" is the claimed Nakayama
  /// automorphism when present.
  std::vector<AutomorphismSpec> declared_autos;
  Caps caps;

  std::vector<int> generator_degrees() const;
  std::vector<std::string> generator_names() const;
  const AutomorphismSpec* find_automorphism(std::string_view name) const;
  bool generated_in_degree_one() const;
  int max_relation_degree() const;

  /// Checks every invariant; throws InvalidPresentation.
  void validate() const;

  friend bool operator==(const AlgebraPresentation&,
                         const AlgebraPresentation&) = default;
};

/// Parses the line-oriented presentation format:
///
///     field Q | field F <p>
///     gen <name> <degree>
///     rel <polynomial>
///     aut <name> : <gen> -> <poly> ; <gen> -> <poly> ; ...
///     cap internal <n>
///     cap homological <n>
///
/// '#' starts a comment. Several statements may share a line separated by
/// ';'. An aut statement owns the following "<gen> -> <poly>" segments; the
/// first segment without "->" starts a new statement.
AlgebraPresentation parse_presentation(std::string_view text);
AlgebraPresentation parse_presentation(std::istream& in);

/// Parses one polynomial expression over the given generators.
NcPoly parse_polynomial(std::string_view text, Field field,
                        const std::vector<Generator>& generators);

/// Canonical text form; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const AlgebraPresentation& p);

/// The algebra map of the free algebra extending generator images.
NcPoly apply_automorphism(const AutomorphismSpec& sigma, const NcPoly& p);

/// sigma followed by tau on generators: x -> tau(sigma(x)).
AutomorphismSpec compose_automorphisms(const AutomorphismSpec& sigma,
                                       const AutomorphismSpec& tau);

/// True iff sigma maps every relation into the ideal and acts invertibly on
/// A_n for every generator degree n. Throws CapExceeded when the Groebner
/// data does not reach the relation degrees.
bool check_is_automorphism(const AutomorphismSpec& sigma,
                           const AlgebraPresentation& presentation,
                           const QuotientAlgebra& algebra);

} // namespace asreg
