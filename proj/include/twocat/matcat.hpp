#pragma once

#include <cstddef>

#include "twocat/matrix.hpp"

// The semiadditive category Mat_k: objects are naturals, a morphism n -> m is
// an m x n matrix, composition is matrix multiplication.
namespace twocat::matcat {

struct MatObj {
  std::size_t dim = 0;
  friend bool operator==(const MatObj&, const MatObj&) = default;
};

enum class Side { first, second };

class MatMor {
 public:
  MatMor() = default;
  /// Throws ShapeError unless mat is tgt.dim x src.dim.
  MatMor(MatObj src, MatObj tgt, Matrix mat);
  /// Source and target read off the matrix shape.
  explicit MatMor(Matrix mat);

  MatObj src() const noexcept { return src_; }
  MatObj tgt() const noexcept { return tgt_; }
  const Matrix& mat() const noexcept { return mat_; }

  friend bool operator==(const MatMor&, const MatMor&) = default;

 private:
  MatObj src_;
  MatObj tgt_;
  Matrix mat_;
};

MatMor identity(MatObj n);
MatMor zero(MatObj src, MatObj tgt);

/// g o f. Throws ShapeError unless f.tgt == g.src.
MatMor compose(const MatMor& g, const MatMor& f);

/// Projection n (+) m -> n (first) or n (+) m -> m (second).
MatMor proj(MatObj n, MatObj m, Side side);
/// Injection n -> n (+) m (first) or m -> n (+) m (second).
MatMor inj(MatObj n, MatObj m, Side side);

/// Mediator into the product: the vertical stack (f // g). Needs a common source.
MatMor pair(const MatMor& f, const MatMor& g);
/// Mediator out of the coproduct: the horizontal stack (h | k). Needs a common target.
MatMor copair(const MatMor& h, const MatMor& k);

/// f (+) g : src_f (+) src_g -> tgt_f (+) tgt_g.
MatMor oplus(const MatMor& f, const MatMor& g);

/// Diagonal n -> n (+) n and codiagonal n (+) n -> n.
MatMor diagonal(MatObj n);
MatMor codiagonal(MatObj n);

/// f + g computed as codiag o (f (+) g) o diag.
MatMor add_via_biproduct(const MatMor& f, const MatMor& g);

/// The morphism r : n (+) m -> n (+) m determined by p_k r i_j = delta_kj,
/// assembled from its four component blocks.
MatMor canonical_r(MatObj n, MatObj m);

/// Exact inverse, if any.
std::optional<MatMor> invert(const MatMor& f);

/// Divide-and-conquer product a o b. Each object above `threshold` is split
/// as ceil(n/2) (+) floor(n/2); blocks are cut out with projections and
/// injections and reassembled with pair/copair and add_via_biproduct. At or
/// below the threshold the plain kernel mat_mul is used.
MatMor dnc_mul(const MatMor& a, const MatMor& b, std::size_t threshold);

}  // namespace twocat::matcat
