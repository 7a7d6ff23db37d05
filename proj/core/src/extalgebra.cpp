#include "asreg/extalgebra.hpp"

#include "asreg/errors.hpp"

#include <algorithm>

namespace asreg {

std::size_t ExtAlgebra::index(int i, std::size_t generator) const {
  return index_.at({i, generator});
}

const std::vector<std::size_t>& ExtAlgebra::block(int i, int j) const {
  static const std::vector<std::size_t> empty;
  auto it = blocks_.find({i, j});
  return it == blocks_.end() ? empty : it->second;
}

std::vector<std::pair<int, int>> ExtAlgebra::bidegrees() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [bd, idx] : blocks_)
    out.push_back(bd);
  return out;
}

const Vec& ExtAlgebra::product(std::size_t a, std::size_t b) const {
  if (products_.empty())
    throw std::logic_error("Ext products not computed");
  return products_.at(a).at(b);
}

Vec ExtAlgebra::multiply(const Vec& u, const Vec& v) const {
  Vec out = zero_vec(field_, dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (u[a].is_zero())
      continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (v[b].is_zero())
        continue;
      Scalar c = u[a] * v[b];
      const Vec& p = product(a, b);
      for (std::size_t t = 0; t < dim(); ++t)
        if (!p[t].is_zero())
          out[t] += c * p[t];
    }
  }
  return out;
}

Vec ExtAlgebra::unit_vector(std::size_t a) const {
  Vec v = zero_vec(field_, dim());
  v.at(a) = Scalar::one(field_);
  return v;
}

ExtAlgebra ext_basis(const Resolution& P) {
  ExtAlgebra E;
  E.field_ = P.algebra().field();
  for (std::size_t i = 0; i < P.v_degrees().size(); ++i) {
    const auto& degs = P.v_degrees()[i];
    for (std::size_t g = 0; g < degs.size(); ++g) {
      std::size_t idx = E.basis_.size();
      int ii = static_cast<int>(i);
      E.basis_.push_back({ii, -degs[g], g});
      E.blocks_[{ii, -degs[g]}].push_back(idx);
      E.index_[{ii, g}] = idx;
    }
  }
  E.finite_ = P.terminated() &&
              std::all_of(P.complete().begin(), P.complete().end(),
                          [](bool b) { return b; });
  return E;
}

ChainMap lift_cocycle(const Resolution& P, int k, std::size_t generator,
                      std::mt19937* perturb) {
  const QuotientAlgebra& A = P.algebra();
  const Field F = A.field();
  if (k < 0 || k > P.length() || generator >= P.term(k).rank())
    throw std::out_of_range("lift_cocycle: no such generator");
  const int db = P.term(k).generator_degrees[generator];
  ChainMap g;
  g.source = P.complex();
  g.target = P.complex();
  g.shift_i = k;
  g.shift_j = -db;
  Scalar sign(F, k % 2 == 0 ? 1L : -1L);

  ModuleMap g0(F, P.term(k), P.term(0), -db);
  g0.set_entry(generator, 0, NcPoly::constant(F, Scalar::one(F)));
  g.set_component(-k, std::move(g0));

  for (int m = 1; k + m <= P.length(); ++m) {
    const GradedFreeModule& src = P.term(k + m);
    ModuleMap prev = g.component(-k - m + 1);
    ModuleMap d = P.differential(k + m);
    ModuleMap gm(F, src, P.term(m), -db);
    for (std::size_t c = 0; c < src.rank(); ++c) {
      ModuleElement rhs = prev.apply(A, d.image(c));
      for (auto& e : rhs)
        e *= sign;
      int n = src.generator_degrees[c] - db;
      auto y = P.lift(m, n, rhs, perturb);
      if (!y)
        throw Error("ext", "cocycle lift failed at position -" +
                               std::to_string(k + m) +
                               " (resolution not exact under the caps)");
      gm.set_image(c, std::move(*y));
    }
    g.set_component(-k - m, std::move(gm));
  }
  return g;
}

namespace {

Vec read_product(const ExtAlgebra& E, const Resolution& P, const ChainMap& gg,
                 int target_i) {
  Vec out = zero_vec(E.field(), E.dim());
  if (target_i > P.length())
    return out;
  ModuleMap comp = gg.component(-target_i);
  for (std::size_t c = 0; c < P.term(target_i).rank(); ++c) {
    const NcPoly& e = comp.entry(c, 0);
    out[E.index(target_i, c)] = e.coefficient(Word());
  }
  return out;
}

void check_depth(const ExtAlgebra& E, const Resolution& P, int total) {
  if (total > P.length() && !P.terminated())
    throw CapExceeded("ext", "product lands in E^" + std::to_string(total) +
                                 " beyond the computed resolution length " +
                                 std::to_string(P.length()));
  (void)E;
}

} // namespace

Vec yoneda_product(const ExtAlgebra& E, const Resolution& P, std::size_t a,
                   std::size_t b, std::mt19937* perturb) {
  const auto& ea = E.basis().at(a);
  const auto& eb = E.basis().at(b);
  check_depth(E, P, ea.i + eb.i);
  ChainMap ga = lift_cocycle(P, ea.i, ea.generator, perturb);
  ChainMap gb = lift_cocycle(P, eb.i, eb.generator, perturb);
  return read_product(E, P, graded_compose(ga, gb), ea.i + eb.i);
}

void compute_products(ExtAlgebra& E, const Resolution& P,
                      std::mt19937* perturb) {
  std::vector<ChainMap> lifts;
  for (const auto& e : E.basis())
    lifts.push_back(lift_cocycle(P, e.i, e.generator, perturb));
  std::vector<std::vector<Vec>> table(E.dim());
  for (std::size_t a = 0; a < E.dim(); ++a)
    for (std::size_t b = 0; b < E.dim(); ++b) {
      int total = E.basis()[a].i + E.basis()[b].i;
      check_depth(E, P, total);
      table[a].push_back(
          read_product(E, P, graded_compose(lifts[a], lifts[b]), total));
    }
  E.products_ = std::move(table);
}

bool check_associativity(const ExtAlgebra& E) {
  for (std::size_t a = 0; a < E.dim(); ++a)
    for (std::size_t b = 0; b < E.dim(); ++b) {
      Vec ab = E.product(a, b);
      for (std::size_t c = 0; c < E.dim(); ++c) {
        Vec left = E.multiply(ab, E.unit_vector(c));
        Vec right = E.multiply(E.unit_vector(a), E.product(b, c));
        if (left != right)
          return false;
      }
    }
  return true;
}

} // namespace asreg
