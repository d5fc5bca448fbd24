#include "twocat/matrix.hpp"

#include <numeric>
#include <ostream>

#include "twocat/errors.hpp"

namespace twocat {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::vector<std::size_t> offsets_of(std::span<const std::size_t> parts) {
  std::vector<std::size_t> off(parts.size() + 1, 0);
  std::partial_sum(parts.begin(), parts.end(), off.begin() + 1);
  return off;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw ShapeError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block outside matrix " + shape(*this));
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw ShapeError("block " + shape(b) + " does not fit in " + shape(*this));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: " + shape(a) + " times " + shape(b));
  Matrix c(a.rows(), b.cols());
  // i-k-j order; structural 0/1 matrices are mostly zero, so skip those terms.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      const bool unit = aik.is_one();
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        Rational& cij = c(i, j);
        if (!cij.is_zero())
          cij += unit ? bkj : aik * bkj;
        else if (unit)
          cij = bkj;
        else
          cij = aik * bkj;
      }
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("mat_add: " + shape(a) + " plus " + shape(b));
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("mat_sub: " + shape(a) + " minus " + shape(b));
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix scale(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: " + shape(a) + " over " + shape(b));
  Matrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: " + shape(a) + " beside " + shape(b));
  Matrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix block_kron(const Matrix& a, std::span<const std::size_t> a_rows,
                  std::span<const std::size_t> a_cols, const Matrix& b,
                  std::span<const std::size_t> b_rows, std::span<const std::size_t> b_cols) {
  const auto ar = offsets_of(a_rows), ac = offsets_of(a_cols);
  const auto br = offsets_of(b_rows), bc = offsets_of(b_cols);
  if (ar.back() != a.rows() || ac.back() != a.cols() || br.back() != b.rows() ||
      bc.back() != b.cols())
    throw ShapeError("block_kron: partition does not match matrix shape");

  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  std::size_t row_off = 0;
  for (std::size_t p = 0; p < a_rows.size(); ++p)
    for (std::size_t q = 0; q < b_rows.size(); ++q) {
      const std::size_t nr_b = b_rows[q];
      std::size_t col_off = 0;
      for (std::size_t x = 0; x < a_cols.size(); ++x)
        for (std::size_t y = 0; y < b_cols.size(); ++y) {
          const std::size_t nc_b = b_cols[y];
          for (std::size_t i = 0; i < a_rows[p]; ++i)
            for (std::size_t j = 0; j < a_cols[x]; ++j) {
              const Rational& s = a(ar[p] + i, ac[x] + j);
              if (s.is_zero()) continue;
              for (std::size_t k = 0; k < nr_b; ++k)
                for (std::size_t l = 0; l < nc_b; ++l)
                  c(row_off + i * nr_b + k, col_off + j * nc_b + l) = s * b(br[q] + k, bc[y] + l);
            }
          col_off += a_cols[x] * nc_b;
        }
      row_off += a_rows[p] * nr_b;
    }
  return c;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string to_string(const Matrix& m) {
  if (m.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += m(i, j).str();
    }
  }
  return s + "}";
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_string(m); }

}  // namespace twocat
