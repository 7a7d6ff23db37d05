#include "asreg/complexes.hpp"

#include "asreg/errors.hpp"

#include <algorithm>
#include <set>

namespace asreg {

namespace {

Scalar sign_scalar(Field f, int exponent) {
  return Scalar(f, (exponent % 2 == 0) ? 1L : -1L);
}

NcPoly twisted(const QuotientAlgebra& A,
               const std::optional<AutomorphismSpec>& sigma, const NcPoly& a) {
  if (!sigma || a.is_zero())
    return a;
  return A.reduce(apply_automorphism(*sigma, a));
}

} // namespace

GradedFreeModule GradedFreeModule::shifted(int j) const {
  GradedFreeModule out = *this;
  for (auto& d : out.generator_degrees)
    d -= j;
  return out;
}

// ---------------------------------------------------------------------------

DegreeCoords::DegreeCoords(const QuotientAlgebra& algebra,
                           const GradedFreeModule& module, int n)
    : algebra_(&algebra), degrees_(module.generator_degrees), n_(n) {
  for (int d : degrees_) {
    offsets_.push_back(dim_);
    dim_ += algebra.basis(n - d).size();
  }
}

Vec DegreeCoords::coordinates(const ModuleElement& x) const {
  Vec v = zero_vec(algebra_->field(), dim_);
  for (std::size_t c = 0; c < degrees_.size(); ++c) {
    if (x[c].is_zero())
      continue;
    Vec part = algebra_->coordinates(x[c], n_ - degrees_[c]);
    std::copy(part.begin(), part.end(),
              v.begin() + static_cast<std::ptrdiff_t>(offsets_[c]));
  }
  return v;
}

ModuleElement DegreeCoords::element(const Vec& v) const {
  ModuleElement x;
  for (std::size_t c = 0; c < degrees_.size(); ++c) {
    int m = n_ - degrees_[c];
    std::size_t len = algebra_->basis(m).size();
    Vec part(v.begin() + static_cast<std::ptrdiff_t>(offsets_[c]),
             v.begin() + static_cast<std::ptrdiff_t>(offsets_[c] + len));
    x.push_back(m < 0 ? NcPoly(algebra_->field())
                      : algebra_->from_coordinates(part, m));
  }
  return x;
}

std::pair<std::size_t, Word> DegreeCoords::basis_element(std::size_t k) const {
  for (std::size_t g = 0; g < degrees_.size(); ++g) {
    const auto& words = algebra_->basis(n_ - degrees_[g]);
    if (k >= offsets_[g] && k < offsets_[g] + words.size())
      return {g, words[k - offsets_[g]]};
  }
  throw std::out_of_range("DegreeCoords::basis_element");
}

// ---------------------------------------------------------------------------

ModuleMap::ModuleMap(Field f, GradedFreeModule source, GradedFreeModule target,
                     int internal_shift)
    : field_(f), source_(std::move(source)), target_(std::move(target)),
      shift_(internal_shift) {
  entries_.assign(source_.rank(), ModuleElement(target_.rank(), NcPoly(f)));
}

ModuleMap ModuleMap::identity(Field f, const GradedFreeModule& m) {
  ModuleMap id(f, m, m, 0);
  for (std::size_t r = 0; r < m.rank(); ++r)
    id.entries_[r][r] = NcPoly::constant(f, Scalar::one(f));
  return id;
}

void ModuleMap::set_entry(std::size_t r, std::size_t c, NcPoly p) {
  if (!p.is_zero()) {
    int expect = source_.generator_degrees[r] + shift_ -
                 target_.generator_degrees[c];
    auto d = p.homogeneous_degree();
    if (!d || *d != expect)
      throw ShapeMismatch("ModuleMap entry has wrong degree");
  }
  entries_.at(r).at(c) = std::move(p);
}

void ModuleMap::set_image(std::size_t r, ModuleElement x) {
  if (x.size() != target_.rank())
    throw ShapeMismatch("image has wrong length");
  for (std::size_t c = 0; c < x.size(); ++c)
    set_entry(r, c, std::move(x[c]));
}

bool ModuleMap::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero())
        return false;
  return true;
}

bool ModuleMap::is_minimal() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.coefficient(Word()).is_zero())
        return false;
  return true;
}

Matrix ModuleMap::constant_part() const {
  Matrix m(field_, source_.rank(), target_.rank());
  for (std::size_t r = 0; r < source_.rank(); ++r)
    for (std::size_t c = 0; c < target_.rank(); ++c)
      m(r, c) = entries_[r][c].coefficient(Word());
  return m;
}

ModuleElement ModuleMap::apply(const QuotientAlgebra& A,
                               const ModuleElement& x) const {
  if (x.size() != source_.rank())
    throw ShapeMismatch("element has wrong length");
  ModuleElement out(target_.rank(), NcPoly(field_));
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r].is_zero())
      continue;
    NcPoly a = twisted(A, twist_, x[r]);
    for (std::size_t c = 0; c < target_.rank(); ++c)
      if (!entries_[r][c].is_zero())
        out[c] += A.multiply(a, entries_[r][c]);
  }
  return out;
}

Matrix ModuleMap::degree_matrix(const QuotientAlgebra& A, int n) const {
  DegreeCoords src(A, source_, n);
  DegreeCoords tgt(A, target_, n + shift_);
  Matrix m(field_, tgt.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    auto [r, w] = src.basis_element(k);
    ModuleElement x(source_.rank(), NcPoly(field_));
    x[r] = NcPoly::monomial(Scalar::one(field_), w);
    Vec col = tgt.coordinates(apply(A, x));
    for (std::size_t i = 0; i < col.size(); ++i)
      m(i, k) = col[i];
  }
  return m;
}

ModuleMap ModuleMap::with_modules(GradedFreeModule source,
                                  GradedFreeModule target) const {
  if (source.rank() != source_.rank() || target.rank() != target_.rank())
    throw ShapeMismatch("with_modules: rank mismatch");
  ModuleMap out = *this;
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  return out;
}

void ModuleMap::check_same_shape(const ModuleMap& rhs) const {
  if (source_.rank() != rhs.source_.rank() ||
      target_.rank() != rhs.target_.rank() || shift_ != rhs.shift_)
    throw ShapeMismatch("module maps of different shape");
}

ModuleMap ModuleMap::operator*(const Scalar& s) const {
  ModuleMap out = *this;
  for (auto& row : out.entries_)
    for (auto& e : row)
      e *= s;
  return out;
}

ModuleMap ModuleMap::operator+(const ModuleMap& rhs) const {
  check_same_shape(rhs);
  ModuleMap out = *this;
  if (!out.twist_)
    out.twist_ = rhs.twist_;
  for (std::size_t r = 0; r < entries_.size(); ++r)
    for (std::size_t c = 0; c < entries_[r].size(); ++c)
      out.entries_[r][c] += rhs.entries_[r][c];
  return out;
}

ModuleMap ModuleMap::operator-(const ModuleMap& rhs) const {
  return *this + rhs * Scalar(field_, -1L);
}

bool ModuleMap::same_entries(const ModuleMap& rhs) const {
  return source_.rank() == rhs.source_.rank() &&
         target_.rank() == rhs.target_.rank() && entries_ == rhs.entries_;
}

ModuleMap compose(const QuotientAlgebra& A, const ModuleMap& g,
                  const ModuleMap& f) {
  if (f.target().rank() != g.source().rank())
    throw ShapeMismatch("compose: target of f is not the source of g");
  ModuleMap out(f.field(), f.source(), g.target(),
                f.internal_shift() + g.internal_shift());
  for (std::size_t r = 0; r < f.source().rank(); ++r) {
    ModuleElement row(g.target().rank(), NcPoly(f.field()));
    for (std::size_t t = 0; t < f.target().rank(); ++t) {
      if (f.entry(r, t).is_zero())
        continue;
      NcPoly a = twisted(A, g.twist(), f.entry(r, t));
      for (std::size_t c = 0; c < g.target().rank(); ++c)
        if (!g.entry(t, c).is_zero())
          row[c] += A.multiply(a, g.entry(t, c));
    }
    out.set_image(r, std::move(row));
  }
  if (f.twist() && g.twist())
    out.set_twist(compose_automorphisms(*f.twist(), *g.twist()));
  else if (f.twist())
    out.set_twist(f.twist());
  else
    out.set_twist(g.twist());
  return out;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(std::shared_ptr<const QuotientAlgebra> algebra)
    : algebra_(std::move(algebra)) {}

void ChainComplex::set_term(int p, GradedFreeModule m) {
  terms_[p] = std::move(m);
}

void ChainComplex::set_differential(int p, ModuleMap d) {
  if (d.source().rank() != term(p).rank() ||
      d.target().rank() != term(p + 1).rank())
    throw ShapeMismatch("differential does not match the terms");
  if (d.internal_shift() != 0)
    throw ShapeMismatch("differentials preserve internal degree");
  differentials_[p] = std::move(d);
}

const GradedFreeModule& ChainComplex::term(int p) const {
  static const GradedFreeModule zero;
  auto it = terms_.find(p);
  return it == terms_.end() ? zero : it->second;
}

ModuleMap ChainComplex::differential(int p) const {
  if (auto it = differentials_.find(p); it != differentials_.end())
    return it->second;
  return ModuleMap(algebra_->field(), term(p), term(p + 1));
}

std::vector<int> ChainComplex::positions() const {
  std::vector<int> out;
  for (const auto& [p, m] : terms_)
    out.push_back(p);
  return out;
}

int ChainComplex::min_position() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int ChainComplex::max_position() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

bool ChainComplex::check_d_squared() const {
  for (const auto& [p, d] : differentials_) {
    ModuleMap dd = compose(*algebra_, differential(p + 1), d);
    if (!dd.is_zero())
      return false;
  }
  return true;
}

ChainComplex shift_sigma(const ChainComplex& X, int k) {
  ChainComplex out(X.algebra_ptr());
  Scalar sign = sign_scalar(X.algebra().field(), k);
  for (int p : X.positions())
    out.set_term(p - k, X.term(p));
  for (int p : X.positions())
    if (X.has_term(p + 1))
      out.set_differential(p - k, X.differential(p) * sign);
  return out;
}

ChainComplex shift_T(const ChainComplex& X, int j) {
  ChainComplex out(X.algebra_ptr());
  for (int p : X.positions())
    out.set_term(p, X.term(p).shifted(j));
  for (int p : X.positions())
    if (X.has_term(p + 1))
      out.set_differential(p, X.differential(p).with_modules(
                                  X.term(p).shifted(j),
                                  X.term(p + 1).shifted(j)));
  return out;
}

// ---------------------------------------------------------------------------

ModuleMap ChainMap::component(int p) const {
  if (auto it = components.find(p); it != components.end())
    return it->second;
  return ModuleMap(source->algebra().field(), source->term(p),
                   target->term(p + shift_i), shift_j);
}

void ChainMap::set_component(int p, ModuleMap m) {
  if (m.source().rank() != source->term(p).rank() ||
      m.target().rank() != target->term(p + shift_i).rank() ||
      m.internal_shift() != shift_j)
    throw ShapeMismatch("chain map component has wrong shape");
  components[p] = std::move(m);
}

bool ChainMap::is_chain_map() const {
  const QuotientAlgebra& A = source->algebra();
  Scalar sign = sign_scalar(A.field(), shift_i);
  std::set<int> ps;
  for (int p : source->positions()) {
    ps.insert(p);
    ps.insert(p - 1);
  }
  for (int p : ps) {
    ModuleMap lhs = compose(A, target->differential(p + shift_i), component(p));
    ModuleMap rhs =
        compose(A, component(p + 1), source->differential(p)) * sign;
    if (!lhs.same_entries(rhs))
      return false;
  }
  return true;
}

bool ChainMap::is_zero() const {
  for (const auto& [p, m] : components)
    if (!m.is_zero())
      return false;
  return true;
}

ChainMap ChainMap::operator*(const Scalar& s) const {
  ChainMap out = *this;
  for (auto& [p, m] : out.components)
    m = m * s;
  return out;
}

ChainMap ChainMap::operator+(const ChainMap& rhs) const {
  if (shift_i != rhs.shift_i || shift_j != rhs.shift_j ||
      !(*source == *rhs.source) || !(*target == *rhs.target))
    throw ShapeMismatch("adding chain maps with different endpoints");
  ChainMap out = *this;
  for (const auto& [p, m] : rhs.components)
    out.components[p] = out.component(p) + m;
  return out;
}

ChainMap ChainMap::operator-(const ChainMap& rhs) const {
  return *this + rhs * Scalar(source->algebra().field(), -1L);
}

ChainMap identity_map(std::shared_ptr<const ChainComplex> X) {
  ChainMap id;
  id.source = X;
  id.target = X;
  for (int p : X->positions())
    id.components[p] = ModuleMap::identity(X->algebra().field(), X->term(p));
  return id;
}

ChainMap shift_sigma_map(const ChainMap& f, int k) {
  ChainMap out;
  out.source = std::make_shared<const ChainComplex>(shift_sigma(*f.source, k));
  out.target = std::make_shared<const ChainComplex>(shift_sigma(*f.target, k));
  out.shift_i = f.shift_i;
  out.shift_j = f.shift_j;
  Scalar sign = sign_scalar(f.source->algebra().field(), f.shift_i * k);
  for (const auto& [p, m] : f.components)
    out.components[p - k] = m * sign;
  return out;
}

ChainMap shift_T_map(const ChainMap& f, int j) {
  ChainMap out;
  out.source = std::make_shared<const ChainComplex>(shift_T(*f.source, j));
  out.target = std::make_shared<const ChainComplex>(shift_T(*f.target, j));
  out.shift_i = f.shift_i;
  out.shift_j = f.shift_j;
  for (const auto& [p, m] : f.components)
    out.components[p] = m.with_modules(f.source->term(p).shifted(j),
                                       f.target->term(p + f.shift_i).shifted(j));
  return out;
}

ChainMap graded_compose(const ChainMap& g, const ChainMap& f) {
  if (!(*g.source == *f.target))
    throw ShapeMismatch("graded_compose: g's source is not f's target");
  const QuotientAlgebra& A = f.source->algebra();
  ChainMap out;
  out.source = f.source;
  out.target = g.target;
  out.shift_i = f.shift_i + g.shift_i;
  out.shift_j = f.shift_j + g.shift_j;
  Scalar sign = sign_scalar(A.field(), f.shift_i * g.shift_i);
  for (const auto& [p, m] : f.components) {
    ModuleMap gm = g.component(p + f.shift_i);
    out.components[p] = compose(A, gm, m) * sign;
  }
  return out;
}

// ---------------------------------------------------------------------------

int t1_sign(int) { return 1; }

int t2_sign(int x_position) { return (x_position % 2 == 0) ? 1 : -1; }

HomElement h1(const HomElement& f, std::shared_ptr<const ChainComplex> X) {
  if (!(shift_sigma(*X) == *f.map.source))
    throw ShapeMismatch("h1: source is not the suspension of X");
  HomElement out;
  out.suspension = f.suspension - 1;
  out.map.source = X;
  out.map.target = f.map.target;
  out.map.shift_i = f.map.shift_i - 1;
  out.map.shift_j = f.map.shift_j;
  Scalar sign = sign_scalar(X->algebra().field(), f.map.shift_i);
  for (const auto& [p, m] : f.map.components)
    out.map.components[p + 1] = m * sign;
  return out;
}

HomElement h2(const HomElement& f, std::shared_ptr<const ChainComplex> Y) {
  if (!(shift_sigma(*Y) == *f.map.target))
    throw ShapeMismatch("h2: target is not the suspension of Y");
  HomElement out;
  out.suspension = f.suspension + 1;
  out.map.source = f.map.source;
  out.map.target = Y;
  out.map.shift_i = f.map.shift_i + 1;
  out.map.shift_j = f.map.shift_j;
  out.map.components = f.map.components;
  return out;
}

// ---------------------------------------------------------------------------

HomotopyResult homotopy_equal(const ChainMap& f, const ChainMap& g) {
  if (f.shift_i != g.shift_i || f.shift_j != g.shift_j ||
      !(*f.source == *g.source) || !(*f.target == *g.target))
    throw ShapeMismatch("homotopy_equal: maps have different endpoints");
  for (const auto* m : {&f, &g})
    for (const auto& [p, c] : m->components)
      if (c.twist())
        throw ShapeMismatch("homotopy_equal needs A-linear maps");

  const ChainComplex& X = *f.source;
  const ChainComplex& Y = *f.target;
  const QuotientAlgebra& A = X.algebra();
  const Field F = A.field();
  const int i = f.shift_i, j = f.shift_j;
  ChainMap delta = f - g;

  struct Block {
    int p;
    std::size_t gen;
    std::size_t offset;
    DegreeCoords coords;
  };
  // unknowns: h^p(e_c) in (Y^{p+i-1})_{d_c+j}; equations: (Y^{p+i})_{d_c+j}
  std::vector<Block> unknowns, equations;
  std::map<std::pair<int, std::size_t>, std::size_t> unknown_at, equation_at;
  std::size_t nu = 0, ne = 0;
  for (int p : X.positions()) {
    const auto& degs = X.term(p).generator_degrees;
    for (std::size_t c = 0; c < degs.size(); ++c) {
      DegreeCoords u(A, Y.term(p + i - 1), degs[c] + j);
      unknown_at[{p, c}] = unknowns.size();
      unknowns.push_back({p, c, nu, u});
      nu += u.dim();
      DegreeCoords e(A, Y.term(p + i), degs[c] + j);
      equation_at[{p, c}] = equations.size();
      equations.push_back({p, c, ne, e});
      ne += e.dim();
    }
  }

  Scalar sign = sign_scalar(F, i);
  SpanSolver solver(F, ne);
  for (const auto& blk : unknowns) {
    ModuleMap dY = Y.differential(blk.p + i - 1);
    ModuleMap dX = X.differential(blk.p - 1);
    for (std::size_t k = 0; k < blk.coords.dim(); ++k) {
      Vec col = zero_vec(F, ne);
      auto [s, w] = blk.coords.basis_element(k);
      NcPoly wp = NcPoly::monomial(Scalar::one(F), w);
      ModuleElement u(Y.term(blk.p + i - 1).rank(), NcPoly(F));
      u[s] = wp;
      // d_Y h^p(e_c)
      const auto& eq = equations[equation_at.at({blk.p, blk.gen})];
      Vec part = eq.coords.coordinates(dY.apply(A, u));
      for (std::size_t t = 0; t < part.size(); ++t)
        col[eq.offset + t] += part[t];
      // (-1)^i h^p(d_X e_{c'}) for c' in X^{p-1}
      if (X.has_term(blk.p - 1)) {
        for (std::size_t cp = 0; cp < X.term(blk.p - 1).rank(); ++cp) {
          const NcPoly& m = dX.entry(cp, blk.gen);
          if (m.is_zero())
            continue;
          ModuleElement v(u.size(), NcPoly(F));
          v[s] = A.multiply(m, wp) * sign;
          const auto& eq2 = equations[equation_at.at({blk.p - 1, cp})];
          Vec part2 = eq2.coords.coordinates(v);
          for (std::size_t t = 0; t < part2.size(); ++t)
            col[eq2.offset + t] += part2[t];
        }
      }
      solver.insert(col);
    }
  }

  Vec rhs = zero_vec(F, ne);
  for (const auto& eq : equations) {
    ModuleElement img = delta.component(eq.p).image(eq.gen);
    Vec part = eq.coords.coordinates(img);
    for (std::size_t t = 0; t < part.size(); ++t)
      rhs[eq.offset + t] = part[t];
  }
  auto sol = solver.solve(rhs);
  HomotopyResult result;
  if (!sol)
    return result;
  result.equal = true;
  ChainMap h;
  h.source = f.source;
  h.target = f.target;
  h.shift_i = i - 1;
  h.shift_j = j;
  for (const auto& blk : unknowns) {
    if (!h.components.count(blk.p))
      h.components[blk.p] =
          ModuleMap(F, X.term(blk.p), Y.term(blk.p + i - 1), j);
    Vec part(sol->begin() + static_cast<std::ptrdiff_t>(blk.offset),
             sol->begin() +
                 static_cast<std::ptrdiff_t>(blk.offset + blk.coords.dim()));
    h.components[blk.p].set_image(blk.gen, blk.coords.element(part));
  }
  result.witness = std::move(h);
  return result;
}

} // namespace asreg
