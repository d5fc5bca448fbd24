#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twocat/matcat.hpp"
#include "twocat/matrix.hpp"

// The 2-category 2Vect in matrix form.
//
// Objects are naturals. A 1-morphism n -> m is an m x n grid whose entries
// are direct-sum decompositions of vector spaces, recorded as the list of
// component dimensions. A 2-morphism f => g between parallel 1-morphisms is a
// grid of the same shape whose entry (k, j) is a linear map
// g(k, j).total() x f(k, j).total(); block (beta, alpha) of that matrix is
// the component map from the alpha-th summand of f(k, j) to the beta-th
// summand of g(k, j).
//
// Layout conventions, fixed throughout:
//   * grids are row-major, entry (k, j) is row k (target index), column j;
//   * a tensor of decompositions lists component pairs left-factor-major;
//   * composites concatenate over the contracted index in ascending order.
namespace twocat {

/// Ordered list of component dimensions of a vector space. May be empty (the
/// zero space with no summands); zero-dimensional components are kept until
/// normalize() removes them.
class Decomp {
 public:
  Decomp() = default;
  Decomp(std::initializer_list<std::size_t> dims) : dims_(dims) {}
  explicit Decomp(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }
  std::size_t total() const;
  /// Start index of each component plus the total; size() + 1 entries.
  std::vector<std::size_t> offsets() const;

  friend bool operator==(const Decomp&, const Decomp&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// a (+) b: components of a followed by those of b.
Decomp concat(const Decomp& a, const Decomp& b);
/// a (x) b: components a_x * b_y for x over a, y over b, x outermost.
Decomp tensor(const Decomp& a, const Decomp& b);
/// "[1,0,2]"
std::string to_string(const Decomp& d);

class OneMor {
 public:
  OneMor() = default;
  /// Throws ShapeError unless entries has tgt * src elements.
  OneMor(std::size_t src, std::size_t tgt, std::vector<Decomp> entries);

  std::size_t src() const noexcept { return src_; }
  std::size_t tgt() const noexcept { return tgt_; }
  const Decomp& at(std::size_t k, std::size_t j) const { return entries_[k * src_ + j]; }
  const std::vector<Decomp>& entries() const noexcept { return entries_; }

  friend bool operator==(const OneMor&, const OneMor&) = default;

 private:
  std::size_t src_ = 0;
  std::size_t tgt_ = 0;
  std::vector<Decomp> entries_;
};

std::string to_string(const OneMor& f);

class TwoMor {
 public:
  TwoMor() = default;
  /// Throws ShapeError unless src and tgt are parallel and every entry has
  /// shape tgt(k, j).total() x src(k, j).total().
  TwoMor(OneMor src, OneMor tgt, std::vector<Matrix> entries);

  const OneMor& src() const noexcept { return src_; }
  const OneMor& tgt() const noexcept { return tgt_; }
  std::size_t rows() const noexcept { return src_.tgt(); }
  std::size_t cols() const noexcept { return src_.src(); }
  const Matrix& at(std::size_t k, std::size_t j) const { return entries_[k * src_.src() + j]; }
  const std::vector<Matrix>& entries() const noexcept { return entries_; }

  bool is_zero() const;

  friend bool operator==(const TwoMor&, const TwoMor&) = default;

 private:
  OneMor src_;
  OneMor tgt_;
  std::vector<Matrix> entries_;
};

std::string to_string(const TwoMor& theta);

/// Grid of plain matrices with block partitions forgotten.
struct MatrixGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Matrix> entries;

  const Matrix& at(std::size_t k, std::size_t j) const { return entries[k * cols + j]; }
  friend bool operator==(const MatrixGrid&, const MatrixGrid&) = default;
};

enum class Side { first, second };

// -- identities and zeros ---------------------------------------------------

/// Diagonal entries [1], off-diagonal entries empty.
OneMor id_one(std::size_t n);
/// All entries empty.
OneMor zero_one(std::size_t src, std::size_t tgt);
TwoMor id_two(const OneMor& f);
TwoMor zero_two(const OneMor& f, const OneMor& g);

// -- 1-morphisms -------------------------------------------------------------

/// r o f, entry (l, j) = (+)_k r(l, k) (x) f(k, j).
OneMor hcompose1(const OneMor& r, const OneMor& f);

/// Matrix of entry totals: the decategorified shadow in Mat_k.
matcat::MatMor decat(const OneMor& f);

/// Entrywise f (+) g of parallel 1-morphisms.
OneMor oplus_one(const OneMor& f, const OneMor& g);

/// pi : f (+) g => f (first) or => g (second).
TwoMor local_proj(const OneMor& f, const OneMor& g, Side side);
/// nu : f => f (+) g (first) or g => f (+) g (second).
TwoMor local_inj(const OneMor& f, const OneMor& g, Side side);

// -- 2-morphisms -------------------------------------------------------------

/// eta . theta (theta first). Entrywise matrix product.
TwoMor vcompose2(const TwoMor& eta, const TwoMor& theta);

/// xi o theta. Entry (m, j) is the block-diagonal sum over k of the
/// block-wise Kronecker product of xi(m, k) with theta(k, j), laid out to
/// match hcompose1 of the sources and of the targets.
TwoMor hcompose2(const TwoMor& xi, const TwoMor& theta);

/// f theta = 1_f o theta.
TwoMor whisker_left(const OneMor& f, const TwoMor& theta);
/// theta f = theta o 1_f.
TwoMor whisker_right(const TwoMor& theta, const OneMor& f);

TwoMor add_two(const TwoMor& a, const TwoMor& b);
TwoMor scale_two(const Rational& s, const TwoMor& a);

/// a (+) b : (src_a (+) src_b) => (tgt_a (+) tgt_b), block-diagonal entries.
TwoMor oplus_two(const TwoMor& a, const TwoMor& b);

/// Two-sided inverse when every entry is invertible.
std::optional<TwoMor> invert(const TwoMor& theta);
/// invert() or throw NotInvertible.
TwoMor inverse_of(const TwoMor& theta);

MatrixGrid flatten(const TwoMor& theta);

// -- structural 2-isomorphisms --------------------------------------------------

struct Normalization {
  OneMor normal;    ///< the input with zero-dimensional components deleted
  TwoMor forward;   ///< f => normal
  TwoMor backward;  ///< normal => f
};

Normalization normalize(const OneMor& f);

/// Normalizes source and target of theta and conjugates by the normalizers.
TwoMor normalize(const TwoMor& theta);

/// (r o f) o e => r o (f o e); each entry a component permutation.
TwoMor associator(const OneMor& r, const OneMor& f, const OneMor& e);
/// r o (f o e) => (r o f) o e.
TwoMor associator_inv(const OneMor& r, const OneMor& f, const OneMor& e);

struct Distributor {
  TwoMor alpha;      ///< f g (+) f h => f (g (+) h)
  TwoMor alpha_inv;  ///< f (g (+) h) => f g (+) f h
};

/// Left distributor for f o (g (+) h).
Distributor distributor(const OneMor& f, const OneMor& g, const OneMor& h);
/// Right distributor for (g (+) h) o e: alpha : g e (+) h e => (g (+) h) e.
Distributor distributor_right(const OneMor& g, const OneMor& h, const OneMor& e);

}  // namespace twocat

namespace twocat {

/// Human-readable description of the first difference between two
/// 2-morphisms (types, then entries), or nullopt when they are equal.
std::optional<std::string> first_difference(const TwoMor& a, const TwoMor& b);

}  // namespace twocat
