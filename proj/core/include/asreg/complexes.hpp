#pragma once

#include "asreg/groebner.hpp"
#include "asreg/linalg.hpp"
#include "asreg/presentation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace asreg {

/// A finitely generated graded free left A-module, the direct sum of
/// A(-d) over its generator degrees d.
struct GradedFreeModule {
  std::vector<int> generator_degrees;

  std::size_t rank() const { return generator_degrees.size(); }
  /// M(j): every generator degree lowered by j.
  GradedFreeModule shifted(int j) const;

  friend bool operator==(const GradedFreeModule&,
                         const GradedFreeModule&) = default;
};

/// Coefficients of an element on the free generators.
using ModuleElement = std::vector<NcPoly>;

/// k-basis of the degree-n part of a free module: pairs (generator c,
/// normal word of degree n - d_c), ordered by generator, then deglex.
class DegreeCoords {
public:
  DegreeCoords(const QuotientAlgebra& algebra, const GradedFreeModule& module,
               int n);

  std::size_t dim() const { return dim_; }
  std::size_t offset(std::size_t generator) const { return offsets_[generator]; }
  int degree() const { return n_; }

  Vec coordinates(const ModuleElement& x) const;
  ModuleElement element(const Vec& v) const;
  /// The basis element (generator, word) at coordinate k.
  std::pair<std::size_t, Word> basis_element(std::size_t k) const;

private:
  const QuotientAlgebra* algebra_;
  std::vector<int> degrees_;
  int n_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

/// A map of free modules given by the images of the source generators:
/// f(e_r) = sum_c entry(r, c) e_c. Without a twist the map is A-linear;
/// with twist sigma it is sigma-linear, f(a x) = sigma(a) f(x). The map
/// raises internal degree by `internal_shift`, so entry (r, c) is
/// homogeneous of degree d_r + internal_shift - d'_c. Entries are kept in
/// normal form.
class ModuleMap {
public:
  ModuleMap() = default;
  ModuleMap(Field f, GradedFreeModule source, GradedFreeModule target,
            int internal_shift = 0);

  static ModuleMap identity(Field f, const GradedFreeModule& m);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int internal_shift() const { return shift_; }
  Field field() const { return field_; }

  const NcPoly& entry(std::size_t r, std::size_t c) const {
    return entries_[r][c];
  }
  void set_entry(std::size_t r, std::size_t c, NcPoly p);
  const ModuleElement& image(std::size_t r) const { return entries_[r]; }
  void set_image(std::size_t r, ModuleElement x);

  const std::optional<AutomorphismSpec>& twist() const { return twist_; }
  void set_twist(std::optional<AutomorphismSpec> sigma) {
    twist_ = std::move(sigma);
  }

  bool is_zero() const;
  /// Every entry lies in the augmentation ideal.
  bool is_minimal() const;
  /// Constant terms of the entries, rows indexed by source generators.
  Matrix constant_part() const;

  ModuleElement apply(const QuotientAlgebra& A, const ModuleElement& x) const;
  /// The k-linear map between degree-n and degree-(n + shift) parts;
  /// column k is the image of coordinate k.
  Matrix degree_matrix(const QuotientAlgebra& A, int n) const;

  /// Same entries viewed between other modules of equal rank.
  ModuleMap with_modules(GradedFreeModule source,
                         GradedFreeModule target) const;

  ModuleMap operator*(const Scalar& s) const;
  ModuleMap operator+(const ModuleMap& rhs) const;
  ModuleMap operator-(const ModuleMap& rhs) const;

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
  /// Equality of shape and entries, ignoring the twist tag.
  bool same_entries(const ModuleMap& rhs) const;

private:
  void check_same_shape(const ModuleMap& rhs) const;

  Field field_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  int shift_ = 0;
  std::vector<ModuleElement> entries_;
  std::optional<AutomorphismSpec> twist_;
};

/// g o f. When f is sigma-linear and g is tau-linear the composite is
/// (tau o sigma)-linear with matrix tau(M_f) M_g.
ModuleMap compose(const QuotientAlgebra& A, const ModuleMap& g,
                  const ModuleMap& f);

/// A bounded cochain complex of free modules, differential of degree +1.
/// Resolutions sit at positions 0, -1, ..., -D.
class ChainComplex {
public:
  explicit ChainComplex(std::shared_ptr<const QuotientAlgebra> algebra);

  const QuotientAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const QuotientAlgebra>& algebra_ptr() const {
    return algebra_;
  }

  void set_term(int p, GradedFreeModule m);
  /// d^p : X^p -> X^{p+1}.
  void set_differential(int p, ModuleMap d);

  /// The zero module outside the support.
  const GradedFreeModule& term(int p) const;
  ModuleMap differential(int p) const;
  bool has_term(int p) const { return terms_.count(p) > 0; }

  std::vector<int> positions() const;
  int min_position() const;
  int max_position() const;

  /// d^{p+1} d^p = 0 for every p.
  bool check_d_squared() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_ &&
           a.differentials_ == b.differentials_;
  }

private:
  std::shared_ptr<const QuotientAlgebra> algebra_;
  std::map<int, GradedFreeModule> terms_;
  std::map<int, ModuleMap> differentials_;
};

/// Sigma^k X: (Sigma^k X)^p = X^{p+k}, differential (-1)^k d.
ChainComplex shift_sigma(const ChainComplex& X, int k = 1);
/// T^j X = X(j): generator degrees lowered by j, no signs.
ChainComplex shift_T(const ChainComplex& X, int j);

/// A homogeneous element of Hom(X, Sigma^i T^j Y), stored as underlying
/// components f^p : X^p -> Y^{p+i} raising internal degree by j. It is a
/// chain map when d_Y f = (-1)^i f d_X. Components may be sigma-linear.
struct ChainMap {
  std::shared_ptr<const ChainComplex> source;
  std::shared_ptr<const ChainComplex> target;
  int shift_i = 0;
  int shift_j = 0;
  std::map<int, ModuleMap> components;

  /// Stored component or the zero map.
  ModuleMap component(int p) const;
  void set_component(int p, ModuleMap m);
  bool is_chain_map() const;
  bool is_zero() const;

  ChainMap operator*(const Scalar& s) const;
  ChainMap operator+(const ChainMap& rhs) const;
  ChainMap operator-(const ChainMap& rhs) const;
};

ChainMap identity_map(std::shared_ptr<const ChainComplex> X);

/// Sigma^k f = (-1)^{ik} s^k f s^{-k} as a map Sigma^k X -> Sigma^{i} T^j
/// Sigma^k Y.
ChainMap shift_sigma_map(const ChainMap& f, int k = 1);
ChainMap shift_T_map(const ChainMap& f, int j);

/// g * f = Sigma^i T^j(g) o f for f of shift (i, j); underlying
/// components (-1)^{i k} g^{p+i} o f^p where k is g's cohomological shift.
ChainMap graded_compose(const ChainMap& g, const ChainMap& f);

/// Sign of (s x) (x) y -> s(x (x) y).
int t1_sign(int x_position);
/// Sign of x (x) (s y) -> s(x (x) y).
int t2_sign(int x_position);

/// s^suspension applied to a graded map; lives in Sigma^suspension Hom.
struct HomElement {
  int suspension = 0;
  ChainMap map;

  int degree() const { return map.shift_i - suspension; }
};

/// Hom(Sigma X, Y) -> Sigma^{-1} Hom(X, Y), f -> (-1)^{|f|} s^{-1}(f o s).
/// `X` must satisfy shift_sigma(*X) == *f.map.source.
HomElement h1(const HomElement& f, std::shared_ptr<const ChainComplex> X);
/// Hom(X, Sigma Y) -> Sigma Hom(X, Y), f -> s(s^{-1} o f).
/// `Y` must satisfy shift_sigma(*Y) == *f.map.target.
HomElement h2(const HomElement& f, std::shared_ptr<const ChainComplex> Y);

struct HomotopyResult {
  bool equal = false;
  /// h with f - g = d h + (-1)^i h d, shift (i - 1, j).
  std::optional<ChainMap> witness;
};

/// Decides whether f - g is null-homotopic by one exact linear solve over
/// the coordinates of h on every generator. Both maps must be A-linear.
HomotopyResult homotopy_equal(const ChainMap& f, const ChainMap& g);

} // namespace asreg
