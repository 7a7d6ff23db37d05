#include "asreg/frobenius.hpp"

#include "asreg/errors.hpp"

#include <algorithm>

namespace asreg {

GradedLinearMap GradedLinearMap::from_matrix(const ExtAlgebra& E,
                                             const Matrix& m,
                                             std::string name) {
  if (m.rows() != E.dim() || m.cols() != E.dim())
    throw ShapeMismatch("graded map has the wrong size");
  GradedLinearMap out;
  out.name = std::move(name);
  std::vector<std::pair<int, int>> where(E.dim());
  for (const auto& bd : E.bidegrees())
    for (std::size_t a : E.block(bd.first, bd.second))
      where[a] = bd;
  for (std::size_t r = 0; r < E.dim(); ++r)
    for (std::size_t c = 0; c < E.dim(); ++c)
      if (!m(r, c).is_zero() && where[r] != where[c])
        throw ShapeMismatch("map does not preserve the bidegree");
  for (const auto& bd : E.bidegrees()) {
    const auto& idx = E.block(bd.first, bd.second);
    Matrix b(E.field(), idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        b(r, c) = m(idx[r], idx[c]);
    out.blocks.emplace(bd, std::move(b));
  }
  return out;
}

Matrix GradedLinearMap::to_matrix(const ExtAlgebra& E) const {
  Matrix m(E.field(), E.dim(), E.dim());
  for (const auto& [bd, b] : blocks) {
    const auto& idx = E.block(bd.first, bd.second);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        m(idx[r], idx[c]) = b(r, c);
  }
  return m;
}

Vec GradedLinearMap::apply(const ExtAlgebra& E, const Vec& v) const {
  return to_matrix(E) * v;
}

GradedLinearMap GradedLinearMap::after(const ExtAlgebra& E,
                                       const GradedLinearMap& other) const {
  return from_matrix(E, to_matrix(E) * other.to_matrix(E),
                     name + " o " + other.name);
}

namespace {

std::vector<Vec> annihilator(const ExtAlgebra& E, bool left) {
  std::vector<Vec> rows;
  for (std::size_t y = 0; y < E.dim(); ++y) {
    if (y == E.unit())
      continue;
    for (std::size_t t = 0; t < E.dim(); ++t) {
      Vec row = zero_vec(E.field(), E.dim());
      for (std::size_t x = 0; x < E.dim(); ++x)
        row[x] = (left ? E.product(x, y) : E.product(y, x))[t];
      if (!is_zero_vec(row))
        rows.push_back(std::move(row));
    }
  }
  Matrix m(E.field(), rows.size(), E.dim());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < E.dim(); ++c)
      m(r, c) = rows[r][c];
  if (rows.empty()) {
    std::vector<Vec> all;
    for (std::size_t a = 0; a < E.dim(); ++a)
      all.push_back(E.unit_vector(a));
    return all;
  }
  return kernel_basis(m);
}

} // namespace

FrobeniusData frobenius_form(const ExtAlgebra& E, std::optional<Scalar> scale) {
  if (!E.finite())
    throw SocleError("Ext algebra is not known to be finite under the caps");
  if (!E.has_products())
    throw std::logic_error("frobenius_form needs the product table");
  auto left = annihilator(E, true);
  auto right = annihilator(E, false);
  if (left.size() != 1 || right.size() != 1)
    throw SocleError("socle of E^+ has left dimension " +
                     std::to_string(left.size()) + " and right dimension " +
                     std::to_string(right.size()));
  Matrix both = Matrix::from_columns(E.field(), E.dim(), {left[0], right[0]});
  if (both.rank() != 1)
    throw SocleError("left and right socles differ");

  FrobeniusData F;
  const Vec& s = left[0];
  std::size_t lead = 0;
  while (s[lead].is_zero())
    ++lead;
  const auto& el = E.basis()[lead];
  F.top = {el.i, el.j};
  if (E.block(el.i, el.j).size() != 1)
    throw SocleError("socle bidegree (" + std::to_string(el.i) + ", " +
                     std::to_string(el.j) + ") has dimension " +
                     std::to_string(E.block(el.i, el.j).size()));
  F.socle_index = lead;
  F.socle = s;
  Scalar inv = s[lead].inverse();
  for (auto& x : F.socle)
    x *= inv;
  F.scale = scale ? *scale : Scalar::one(E.field());
  if (F.scale.field() != E.field() || F.scale.is_zero())
    throw std::invalid_argument("frobenius_form: bad scale");

  F.pairing = Matrix(E.field(), E.dim(), E.dim());
  for (std::size_t a = 0; a < E.dim(); ++a)
    for (std::size_t b = 0; b < E.dim(); ++b)
      F.pairing(a, b) = F.scale * E.product(a, b)[lead];
  F.nondegenerate = F.pairing.rank() == E.dim();
  for (const auto& bd : E.bidegrees()) {
    const auto& rows = E.block(bd.first, bd.second);
    const auto& cols = E.block(F.top.first - bd.first, F.top.second - bd.second);
    Matrix b(E.field(), rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        b(r, c) = F.pairing(rows[r], cols[c]);
    F.blocks.emplace(bd, std::move(b));
  }
  return F;
}

GradedLinearMap nakayama_of_E(const ExtAlgebra& E, const FrobeniusData& F) {
  auto inv = F.pairing.transpose().inverse();
  if (!F.nondegenerate || !inv)
    throw DegeneratePairing("pairing e(xy) has rank " +
                            std::to_string(F.pairing.rank()) + " < " +
                            std::to_string(E.dim()));
  return GradedLinearMap::from_matrix(E, *inv * F.pairing, "mu_E");
}

GradedLinearMap xi_automorphism(const ExtAlgebra& E, const Scalar& a,
                                const Scalar& b) {
  Matrix m(E.field(), E.dim(), E.dim());
  for (std::size_t t = 0; t < E.dim(); ++t)
    m(t, t) = a.pow(E.basis()[t].i) * b.pow(E.basis()[t].j);
  return GradedLinearMap::from_matrix(E, m,
                                      "xi(" + a.to_string() + "," +
                                          b.to_string() + ")");
}

bool is_graded_symmetric(const ExtAlgebra& E, const GradedLinearMap& mu) {
  int d = 0;
  for (const auto& e : E.basis())
    d = std::max(d, e.i);
  Scalar sign(E.field(), d % 2 == 1 ? 1L : -1L);
  return mu == xi_automorphism(E, sign, Scalar::one(E.field()));
}

bool is_algebra_automorphism(const ExtAlgebra& E, const GradedLinearMap& f) {
  Matrix m = f.to_matrix(E);
  if (m.rank() != E.dim())
    return false;
  if (m * E.unit_vector(E.unit()) != E.unit_vector(E.unit()))
    return false;
  for (std::size_t a = 0; a < E.dim(); ++a)
    for (std::size_t b = 0; b < E.dim(); ++b)
      if (m * E.product(a, b) !=
          E.multiply(m * E.unit_vector(a), m * E.unit_vector(b)))
        return false;
  return true;
}

} // namespace asreg
