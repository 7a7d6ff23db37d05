#pragma once

#include "asreg/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asreg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
bool is_zero_vec(const Vec& v);

/// Dense matrix over an exact field, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(Field f, std::size_t rows,
                             const std::vector<Vec>& columns);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(const Vec& v) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;

  std::size_t rank() const;
  /// Inverse of a square matrix; nullopt when singular.
  std::optional<Matrix> inverse() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Incremental column echelon with provenance tracking. Columns of a linear
/// map are inserted in order; each stored echelon vector remembers which
/// combination of inserted columns produced it. This answers image
/// membership, solves, and yields a deterministic kernel basis: column c
/// contributes a kernel vector exactly when it reduces to zero against the
/// columns before it. Pivots are the lowest nonzero coordinate.
class SpanSolver {
public:
  SpanSolver(Field f, std::size_t ambient_dim);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t columns() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Inserts the next column. Returns true when it raised the rank.
  bool insert(const Vec& column);

  bool contains(const Vec& v) const;
  /// x with sum_c x_c * column_c == b, free columns set to zero.
  std::optional<Vec> solve(const Vec& b) const;
  /// Kernel basis, one vector per dependent column, ascending by column;
  /// each vector has length columns().
  std::vector<Vec> kernel() const;
  /// `v` minus its projection onto the span along the echelon pivots.
  Vec residual(const Vec& v) const;

private:
  struct Row {
    std::size_t pivot;
    Vec vec;         // pivot entry normalized to 1
    Vec provenance;  // combination of inserted columns
  };

  // reduces v in place; returns provenance of the subtracted part
  Vec reduce(Vec& v, std::size_t ncols) const;

  Field field_;
  std::size_t dim_;
  std::size_t ncols_ = 0;
  std::vector<Row> rows_;
  std::vector<Vec> kernel_;
};

/// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

} // namespace asreg
