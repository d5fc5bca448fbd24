#include "twocat/matcat.hpp"

#include <algorithm>
#include <string>

#include "twocat/errors.hpp"

namespace twocat::matcat {

MatMor::MatMor(MatObj src, MatObj tgt, Matrix mat) : src_(src), tgt_(tgt), mat_(std::move(mat)) {
  if (mat_.rows() != tgt_.dim || mat_.cols() != src_.dim)
    throw ShapeError("morphism " + std::to_string(src_.dim) + " -> " + std::to_string(tgt_.dim) +
                     " given a " + std::to_string(mat_.rows()) + "x" +
                     std::to_string(mat_.cols()) + " matrix");
}

MatMor::MatMor(Matrix mat) : src_{mat.cols()}, tgt_{mat.rows()}, mat_(std::move(mat)) {}

MatMor identity(MatObj n) { return MatMor(n, n, Matrix::identity(n.dim)); }

MatMor zero(MatObj src, MatObj tgt) { return MatMor(src, tgt, Matrix::zero(tgt.dim, src.dim)); }

MatMor compose(const MatMor& g, const MatMor& f) {
  if (f.tgt() != g.src())
    throw ShapeError("compose: target " + std::to_string(f.tgt().dim) + " does not match source " +
                     std::to_string(g.src().dim));
  return MatMor(f.src(), g.tgt(), mat_mul(g.mat(), f.mat()));
}

MatMor proj(MatObj n, MatObj m, Side side) {
  const MatObj sum{n.dim + m.dim};
  if (side == Side::first)
    return MatMor(sum, n, hstack(Matrix::identity(n.dim), Matrix::zero(n.dim, m.dim)));
  return MatMor(sum, m, hstack(Matrix::zero(m.dim, n.dim), Matrix::identity(m.dim)));
}

MatMor inj(MatObj n, MatObj m, Side side) {
  const MatMor p = proj(n, m, side);
  return MatMor(p.tgt(), p.src(), p.mat().transpose());
}

MatMor pair(const MatMor& f, const MatMor& g) {
  if (f.src() != g.src()) throw ShapeError("pair: components have different sources");
  return MatMor(f.src(), MatObj{f.tgt().dim + g.tgt().dim}, vstack(f.mat(), g.mat()));
}

MatMor copair(const MatMor& h, const MatMor& k) {
  if (h.tgt() != k.tgt()) throw ShapeError("copair: components have different targets");
  return MatMor(MatObj{h.src().dim + k.src().dim}, h.tgt(), hstack(h.mat(), k.mat()));
}

MatMor oplus(const MatMor& f, const MatMor& g) {
  return MatMor(MatObj{f.src().dim + g.src().dim}, MatObj{f.tgt().dim + g.tgt().dim},
                direct_sum(f.mat(), g.mat()));
}

MatMor diagonal(MatObj n) { return pair(identity(n), identity(n)); }

MatMor codiagonal(MatObj n) { return copair(identity(n), identity(n)); }

MatMor add_via_biproduct(const MatMor& f, const MatMor& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt())
    throw ShapeError("add_via_biproduct: summands are not parallel");
  return compose(codiagonal(f.tgt()), compose(oplus(f, g), diagonal(f.src())));
}

MatMor canonical_r(MatObj n, MatObj m) {
  // Block (k, j) is the morphism j -> k forced by p_k r i_j = delta_kj.
  const MatMor r11 = identity(n), r22 = identity(m);
  const MatMor r12 = zero(m, n), r21 = zero(n, m);
  return pair(copair(r11, r12), copair(r21, r22));
}

std::optional<MatMor> invert(const MatMor& f) {
  auto inv = inverse(f.mat());
  if (!inv) return std::nullopt;
  return MatMor(f.tgt(), f.src(), std::move(*inv));
}

namespace {

struct Split {
  MatObj hi;  // ceil(n/2)
  MatObj lo;  // floor(n/2)
};

Split halve(MatObj n) { return {MatObj{(n.dim + 1) / 2}, MatObj{n.dim / 2}}; }

/// Block of f from summand `in` of its source to summand `out` of its target.
MatMor cut(const MatMor& f, const Split& src, Side in, const Split& tgt, Side out) {
  return compose(proj(tgt.hi, tgt.lo, out), compose(f, inj(src.hi, src.lo, in)));
}

MatMor dnc(const MatMor& a, const MatMor& b, std::size_t threshold) {
  // a : k -> m, b : n -> k
  const MatObj n = b.src(), k = b.tgt(), m = a.tgt();
  if (n.dim == 0 || k.dim == 0 || m.dim == 0) return zero(n, m);
  if (std::max({n.dim, k.dim, m.dim}) <= threshold) return compose(a, b);

  const Split sn = halve(n), sk = halve(k), sm = halve(m);
  const Side sides[2] = {Side::first, Side::second};

  // a_blk[i][q] : sk_q -> sm_i, b_blk[q][l] : sn_l -> sk_q
  MatMor a_blk[2][2], b_blk[2][2];
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      a_blk[x][y] = cut(a, sk, sides[y], sm, sides[x]);
      b_blk[x][y] = cut(b, sn, sides[y], sk, sides[x]);
    }

  MatMor row_blocks[2];
  for (int i = 0; i < 2; ++i) {
    MatMor cols[2];
    for (int l = 0; l < 2; ++l)
      cols[l] = add_via_biproduct(dnc(a_blk[i][0], b_blk[0][l], threshold), dnc(a_blk[i][1], b_blk[1][l], threshold));
    row_blocks[i] = copair(cols[0], cols[1]);
  }
  return pair(row_blocks[0], row_blocks[1]);
}

}  // namespace

MatMor dnc_mul(const MatMor& a, const MatMor& b, std::size_t threshold) {
  if (threshold == 0) throw std::invalid_argument("dnc_mul: threshold must be at least 1");
  if (b.tgt() != a.src())
    throw ShapeError("dnc_mul: target " + std::to_string(b.tgt().dim) +
                     " does not match source " + std::to_string(a.src().dim));
  return dnc(a, b, threshold);
}

}  // namespace twocat::matcat
