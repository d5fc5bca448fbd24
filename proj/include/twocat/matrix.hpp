#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twocat/rational.hpp"

namespace twocat {

/// Dense row-major matrix of exact rationals. Shapes with zero rows or zero
/// columns are legal and compose like any other.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-list literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  std::span<const Rational> data() const noexcept { return data_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  /// Copy of the nr x nc block whose top-left corner is (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& s, const Matrix& a);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Block-diagonal diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// [a ; b] (a above b). Column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// [a | b]. Row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

/// Block-wise Kronecker product of two partitioned matrices.
///
/// `a` is partitioned into row blocks `a_rows` and column blocks `a_cols`
/// (sizes summing to the matrix shape), likewise `b`. The result is
/// partitioned by row-major pairs of blocks: row block (c, d) and column
/// block (x, y) hold kron(a[c, x], b[d, y]). With all parts of size one this
/// is the ordinary Kronecker product.
Matrix block_kron(const Matrix& a, std::span<const std::size_t> a_rows,
                  std::span<const std::size_t> a_cols, const Matrix& b,
                  std::span<const std::size_t> b_rows, std::span<const std::size_t> b_cols);

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular or not
/// square.
std::optional<Matrix> inverse(const Matrix& a);

/// Nested-row text "{1 0; 0 1/2}"; "{}" for an empty matrix.
std::string to_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace twocat
