#pragma once

#include "asreg/resolution.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace asreg {

/// Dual basis vector of a V^{(-i)} generator, of bidegree (i, j) with
/// j = -(internal degree of the generator).
struct ExtBasisElement {
  int i = 0;
  int j = 0;
  std::size_t generator = 0;
};

/// E = (+)_{i,j} E^{i,j} with E^i = (V^{(-i)})^*, by basis and structure
/// constants. Basis order: by homological degree, then generator index.
class ExtAlgebra {
public:
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ExtBasisElement>& basis() const { return basis_; }
  std::size_t unit() const { return 0; }
  std::size_t index(int i, std::size_t generator) const;
  /// Basis indices of E^{i,j}, ascending.
  const std::vector<std::size_t>& block(int i, int j) const;
  std::vector<std::pair<int, int>> bidegrees() const;

  /// The resolution terminated with no truncation, so E is complete.
  bool finite() const { return finite_; }
  std::optional<int> d() const { return d_; }
  std::optional<int> ell() const { return ell_; }
  void set_signature(std::optional<int> d, std::optional<int> ell) {
    d_ = d;
    ell_ = ell;
  }

  bool has_products() const { return !products_.empty(); }
  /// e_a * e_b in coordinates.
  const Vec& product(std::size_t a, std::size_t b) const;
  Vec multiply(const Vec& u, const Vec& v) const;
  Vec unit_vector(std::size_t a) const;

private:
  friend ExtAlgebra ext_basis(const Resolution& P);
  friend void compute_products(ExtAlgebra& E, const Resolution& P,
                               std::mt19937* perturb);

  Field field_;
  std::vector<ExtBasisElement> basis_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks_;
  std::map<std::pair<int, std::size_t>, std::size_t> index_;
  bool finite_ = false;
  std::optional<int> d_;
  std::optional<int> ell_;
  std::vector<std::vector<Vec>> products_;
};

/// Basis of E from the resolution; products unset.
ExtAlgebra ext_basis(const Resolution& P);

/// Chain map P -> Sigma^k T^l P lifting the dual of generator `generator`
/// of V^{(-k)}: e_b -> 1 at position -k, other generators -> 0, and
/// d y = (-1)^k g(d e_c) solved position by position.
ChainMap lift_cocycle(const Resolution& P, int k, std::size_t generator,
                      std::mt19937* perturb = nullptr);

/// e_a * e_b = (g_a * g_b) read at position -(i + k) modulo A_{>=1}.
Vec yoneda_product(const ExtAlgebra& E, const Resolution& P, std::size_t a,
                   std::size_t b, std::mt19937* perturb = nullptr);

/// Fills the full structure-constant table (lifts computed once per basis
/// element). Products landing beyond a non-terminated resolution throw.
void compute_products(ExtAlgebra& E, const Resolution& P,
                      std::mt19937* perturb = nullptr);

bool check_associativity(const ExtAlgebra& E);

} // namespace asreg
