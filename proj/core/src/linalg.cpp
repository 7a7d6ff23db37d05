#include "asreg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace asreg {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows,
                            const std::vector<Vec>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero())
        continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs(k, c).is_zero())
          out(r, c) += a * rhs(k, c);
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero())
        out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    x *= s;
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  return *this + rhs * Scalar(field_, -1L);
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return rref(copy).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Scalar::one(field_);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
    return std::nullopt;
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = aug(r, n + c);
  return inv;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const Field f = m.field();
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero())
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    std::vector<std::size_t> nz;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) {
        m(row, c) *= inv;
        nz.push_back(c);
      }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Scalar factor = m(r, col);
      for (std::size_t c : nz)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  (void)f;
  return pivots;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

SpanSolver::SpanSolver(Field f, std::size_t ambient_dim)
    : field_(f), dim_(ambient_dim) {}

Vec SpanSolver::reduce(Vec& v, std::size_t ncols) const {
  Vec prov = zero_vec(field_, ncols);
  for (const Row& row : rows_) {
    const Scalar& a = v[row.pivot];
    if (a.is_zero())
      continue;
    Scalar factor = a;
    for (std::size_t i = row.pivot; i < dim_; ++i)
      if (!row.vec[i].is_zero())
        v[i] -= factor * row.vec[i];
    for (std::size_t i = 0; i < row.provenance.size(); ++i)
      if (!row.provenance[i].is_zero())
        prov[i] += factor * row.provenance[i];
  }
  return prov;
}

bool SpanSolver::insert(const Vec& column) {
  if (column.size() != dim_)
    throw std::invalid_argument("SpanSolver column has wrong length");
  std::size_t idx = ncols_++;
  Vec v = column;
  Vec prov = reduce(v, ncols_);
  // v == column - sum(prov_k * col_k)
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot].is_zero())
    ++pivot;
  if (pivot == dim_) {
    Vec k = zero_vec(field_, ncols_);
    for (std::size_t i = 0; i < idx; ++i)
      k[i] = -prov[i];
    k[idx] = Scalar::one(field_);
    kernel_.push_back(std::move(k));
    return false;
  }
  Scalar inv = v[pivot].inverse();
  for (auto& x : v)
    if (!x.is_zero())
      x *= inv;
  Vec p = zero_vec(field_, ncols_);
  for (std::size_t i = 0; i < idx; ++i)
    p[i] = -prov[i] * inv;
  p[idx] = inv;
  rows_.push_back(Row{pivot, std::move(v), std::move(p)});
  return true;
}

std::vector<Vec> SpanSolver::kernel() const {
  std::vector<Vec> out = kernel_;
  for (auto& k : out)
    k.resize(ncols_, Scalar::zero(field_));
  return out;
}

bool SpanSolver::contains(const Vec& v) const {
  Vec copy = v;
  reduce(copy, ncols_);
  return is_zero_vec(copy);
}

std::optional<Vec> SpanSolver::solve(const Vec& b) const {
  if (b.size() != dim_)
    throw std::invalid_argument("SpanSolver rhs has wrong length");
  Vec copy = b;
  Vec prov = reduce(copy, ncols_);
  if (!is_zero_vec(copy))
    return std::nullopt;
  prov.resize(ncols_, Scalar::zero(field_));
  return prov;
}

Vec SpanSolver::residual(const Vec& v) const {
  Vec copy = v;
  reduce(copy, ncols_);
  return copy;
}

} // namespace asreg
