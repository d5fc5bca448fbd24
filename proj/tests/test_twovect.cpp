#include "doctest.h"

#include "twocat/errors.hpp"
#include "twocat/laws.hpp"
#include "twocat/twovect.hpp"

using namespace twocat;

namespace {

laws::LawConfig small() { return laws::LawConfig{}; }

// Position of (u, v) from the plain Kronecker layout of totals in the
// component layout (x, y) -> x-major, u, v within the component block.
std::vector<std::size_t> shuffle_oracle(const Decomp& a, const Decomp& b) {
  std::vector<std::size_t> a_comp, a_local, b_comp, b_local;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t u = 0; u < a[x]; ++u) a_comp.push_back(x), a_local.push_back(u);
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t v = 0; v < b[y]; ++v) b_comp.push_back(y), b_local.push_back(v);
  std::vector<std::size_t> pos;
  for (std::size_t s = 0; s < a_comp.size(); ++s)
    for (std::size_t t = 0; t < b_comp.size(); ++t) {
      std::size_t start = 0;
      for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
          if (x < a_comp[s] || (x == a_comp[s] && y < b_comp[t])) start += a[x] * b[y];
      pos.push_back(start + a_local[s] * b[b_comp[t]] + b_local[t]);
    }
  return pos;
}

// Horizontal composite recomputed from raw entries with field operations.
std::vector<Matrix> hcompose2_oracle(const TwoMor& xi, const TwoMor& theta) {
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < xi.rows(); ++l)
    for (std::size_t j = 0; j < theta.cols(); ++j) {
      std::size_t rows = 0, cols = 0;
      for (std::size_t k = 0; k < xi.cols(); ++k) {
        rows += xi.at(l, k).rows() * theta.at(k, j).rows();
        cols += xi.at(l, k).cols() * theta.at(k, j).cols();
      }
      Matrix acc(rows, cols);
      std::size_t r0 = 0, c0 = 0;
      for (std::size_t k = 0; k < xi.cols(); ++k) {
        const Matrix& a = xi.at(l, k);
        const Matrix& b = theta.at(k, j);
        const auto rp = shuffle_oracle(xi.tgt().at(l, k), theta.tgt().at(k, j));
        const auto cp = shuffle_oracle(xi.src().at(l, k), theta.src().at(k, j));
        for (std::size_t i = 0; i < a.rows(); ++i)
          for (std::size_t p = 0; p < b.rows(); ++p)
            for (std::size_t c = 0; c < a.cols(); ++c)
              for (std::size_t q = 0; q < b.cols(); ++q)
                acc(r0 + rp[i * b.rows() + p], c0 + cp[c * b.cols() + q]) = a(i, c) * b(p, q);
        r0 += a.rows() * b.rows();
        c0 += a.cols() * b.cols();
      }
      out.push_back(std::move(acc));
    }
  return out;
}

}  // namespace

TEST_CASE("decompositions") {
  const Decomp d{1, 0, 2};
  CHECK(d.total() == 3);
  CHECK(d.offsets() == std::vector<std::size_t>{0, 1, 1, 3});
  CHECK(concat(Decomp{1}, Decomp{2, 3}) == Decomp{1, 2, 3});
  CHECK(tensor(Decomp{1, 2}, Decomp{3, 4}) == Decomp{3, 4, 6, 8});
  CHECK(tensor(Decomp{}, Decomp{3}) == Decomp{});
  CHECK(to_string(d) == "[1,0,2]");
}

TEST_CASE("identity and zero 1-morphisms") {
  const OneMor i2 = id_one(2);
  CHECK(i2.at(0, 0) == Decomp{1});
  CHECK(i2.at(0, 1) == Decomp{});
  CHECK(i2.at(1, 0) == Decomp{});
  CHECK(i2.at(1, 1) == Decomp{1});
  const OneMor z = zero_one(2, 3);
  CHECK(z.src() == 2);
  CHECK(z.tgt() == 3);
  for (const auto& e : z.entries()) CHECK(e.size() == 0);
  CHECK_THROWS_AS(OneMor(2, 2, {{1}}), ShapeError);
}

TEST_CASE("hcompose1 entries") {
  const OneMor r(1, 1, {{2}}), f(1, 1, {{3}});
  CHECK(hcompose1(r, f).at(0, 0) == Decomp{6});
  const OneMor h(2, 1, {{1, 1}, {1}});
  const OneMor g(3, 2, {{1, 2}, {1}, {2}, {1}, {2}, {1}});
  const OneMor hg = hcompose1(h, g);
  CHECK(hg.at(0, 0) == concat(tensor(h.at(0, 0), g.at(0, 0)), tensor(h.at(0, 1), g.at(1, 0))));
  CHECK(hg.at(0, 0) == Decomp{1, 2, 1, 2, 1});
  CHECK_THROWS_AS(hcompose1(g, g), ShapeError);
}

TEST_CASE("hcompose1 with identity normalizes back") {
  laws::Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b);
    CHECK(decat(hcompose1(id_one(b), f)) == decat(f));
    CHECK(normalize(hcompose1(id_one(b), f)).normal == normalize(f).normal);
    CHECK(normalize(hcompose1(f, id_one(a))).normal == normalize(f).normal);
  }
}

TEST_CASE("decat") {
  CHECK(decat(id_one(3)).mat() == Matrix::identity(3));
  CHECK(decat(zero_one(2, 3)).mat() == Matrix::zero(3, 2));
  laws::Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3), c = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b), r = gen_one_mor(rng, small(), b, c);
    CHECK(decat(hcompose1(r, f)).mat() == mat_mul(decat(r).mat(), decat(f).mat()));
  }
}

TEST_CASE("identity and zero 2-morphisms") {
  laws::Rng rng(3);
  const OneMor f = gen_one_mor(rng, small(), 2, 3), g = gen_one_mor(rng, small(), 2, 3);
  const TwoMor t = gen_two_mor(rng, small(), f, g);
  CHECK(vcompose2(id_two(g), t) == t);
  CHECK(vcompose2(t, id_two(f)) == t);
  const TwoMor z = zero_two(f, g);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(z.at(k, j).rows() == g.at(k, j).total());
      CHECK(z.at(k, j).cols() == f.at(k, j).total());
    }
  CHECK(id_two(zero_one(2, 3)) == zero_two(zero_one(2, 3), zero_one(2, 3)));
  CHECK(add_two(t, zero_two(f, g)) == t);
}

TEST_CASE("local biproduct of parallel 1-morphisms") {
  laws::Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b), g = gen_one_mor(rng, small(), a, b);
    const TwoMor p1 = local_proj(f, g, Side::first), p2 = local_proj(f, g, Side::second);
    const TwoMor n1 = local_inj(f, g, Side::first), n2 = local_inj(f, g, Side::second);
    CHECK(vcompose2(p1, n1) == id_two(f));
    CHECK(vcompose2(p2, n2) == id_two(g));
    CHECK(vcompose2(p1, n2).is_zero());
    CHECK(add_two(vcompose2(n1, p1), vcompose2(n2, p2)) == id_two(oplus_one(f, g)));
    CHECK(normalize(oplus_one(f, zero_one(a, b))).normal == normalize(f).normal);
  }
}

TEST_CASE("vcompose2 splits the middle decomposition") {
  const OneMor f(1, 1, {{1}}), g(1, 1, {{1, 1, 1}}), l(1, 1, {{2}});
  const TwoMor theta(f, g, {Matrix{{1}, {2}, {3}}});
  const TwoMor eta(g, l, {Matrix{{1, 0, 1}, {0, 1, Rational(1, 2)}}});
  // Sum over the three components of g of eta^b theta^b.
  Matrix sum = Matrix::zero(2, 1);
  for (std::size_t b = 0; b < 3; ++b)
    sum = mat_add(sum, mat_mul(eta.at(0, 0).block(0, b, 2, 1), theta.at(0, 0).block(b, 0, 1, 1)));
  CHECK(sum == Matrix{{4}, {Rational(7, 2)}});
  CHECK(vcompose2(eta, theta).at(0, 0) == sum);
  CHECK_THROWS_AS(vcompose2(theta, theta), ShapeError);
}

TEST_CASE("vcompose2 is entrywise product of flattenings") {
  laws::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b), g = gen_one_mor(rng, small(), a, b),
                 h = gen_one_mor(rng, small(), a, b);
    const TwoMor x = gen_two_mor(rng, small(), f, g), y = gen_two_mor(rng, small(), g, h);
    const MatrixGrid fx = flatten(x), fy = flatten(y), fyx = flatten(vcompose2(y, x));
    for (std::size_t i = 0; i < fx.entries.size(); ++i) CHECK(fyx.entries[i] == mat_mul(fy.entries[i], fx.entries[i]));
  }
}

TEST_CASE("hcompose2 first block is the scaled-copy arrangement") {
  const OneMor h(1, 1, {{1, 1}}), k(1, 1, {{1, 1}});
  const OneMor f(1, 1, {{1, 1}}), g(1, 1, {{1}});
  const TwoMor xi(h, k, {Matrix{{1, 2}, {3, 4}}});
  const TwoMor theta(f, g, {Matrix{{5, 6}}});
  const Matrix e = hcompose2(xi, theta).at(0, 0);
  const Matrix t = theta.at(0, 0);
  CHECK(e == Matrix{{5, 6, 10, 12}, {15, 18, 20, 24}});
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t x = 0; x < 2; ++x) CHECK(e.block(c, 2 * x, 1, 2) == scale(xi.at(0, 0)(c, x), t));
}

TEST_CASE("hcompose2 matches the Kronecker shuffle oracle") {
  laws::Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3), c = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b), g = gen_one_mor(rng, small(), a, b);
    const OneMor h = gen_one_mor(rng, small(), b, c), k = gen_one_mor(rng, small(), b, c);
    const TwoMor theta = gen_two_mor(rng, small(), f, g), xi = gen_two_mor(rng, small(), h, k);
    const TwoMor got = hcompose2(xi, theta);
    CHECK(got.src() == hcompose1(h, f));
    CHECK(got.tgt() == hcompose1(k, g));
    CHECK(got.entries() == hcompose2_oracle(xi, theta));
  }
}

TEST_CASE("hcompose2 with identities and zeros") {
  laws::Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t a = rng.between(0, 3), b = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), a, b), g = gen_one_mor(rng, small(), a, b);
    const TwoMor theta = gen_two_mor(rng, small(), f, g);
    CHECK(normalize(hcompose2(id_two(id_one(b)), theta)) == normalize(theta));
    CHECK(normalize(whisker_left(id_one(b), theta)) == normalize(theta));
    CHECK(normalize(whisker_right(theta, id_one(a))) == normalize(theta));
    const OneMor e = gen_one_mor(rng, small(), b, 2);
    CHECK(whisker_left(e, zero_two(f, g)).is_zero());
  }
}

TEST_CASE("interchange and whisker composition") {
  laws::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t A = rng.between(0, 3), B = rng.between(0, 3), C = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), A, B), g = gen_one_mor(rng, small(), A, B),
                 h = gen_one_mor(rng, small(), A, B);
    const OneMor k = gen_one_mor(rng, small(), B, C), l = gen_one_mor(rng, small(), B, C),
                 m = gen_one_mor(rng, small(), B, C);
    const TwoMor a = gen_two_mor(rng, small(), f, g), b = gen_two_mor(rng, small(), g, h);
    const TwoMor c = gen_two_mor(rng, small(), k, l), d = gen_two_mor(rng, small(), l, m);
    CHECK(hcompose2(vcompose2(d, c), vcompose2(b, a)) == vcompose2(hcompose2(d, b), hcompose2(c, a)));
    CHECK(hcompose2(c, a) == vcompose2(whisker_left(l, a), whisker_right(c, f)));
  }
}

TEST_CASE("distributivity of sums") {
  laws::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::size_t A = rng.between(0, 3), B = rng.between(0, 3), C = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), A, B), g = gen_one_mor(rng, small(), A, B);
    const OneMor k = gen_one_mor(rng, small(), B, C), l = gen_one_mor(rng, small(), B, C);
    const OneMor h = gen_one_mor(rng, small(), A, B);
    const TwoMor a = gen_two_mor(rng, small(), f, g), b = gen_two_mor(rng, small(), f, g);
    const TwoMor c = gen_two_mor(rng, small(), k, l);
    CHECK(hcompose2(c, add_two(a, b)) == add_two(hcompose2(c, a), hcompose2(c, b)));
    const TwoMor d = gen_two_mor(rng, small(), g, h);
    CHECK(vcompose2(d, add_two(a, b)) == add_two(vcompose2(d, a), vcompose2(d, b)));
    const MatrixGrid s = flatten(add_two(a, b)), fa = flatten(a), fb = flatten(b);
    for (std::size_t i = 0; i < s.entries.size(); ++i) CHECK(s.entries[i] == mat_add(fa.entries[i], fb.entries[i]));
  }
}

TEST_CASE("flatten of identity") {
  const OneMor f(2, 1, {{1, 2}, {0, 3}});
  const MatrixGrid g = flatten(id_two(f));
  CHECK(g.rows == 1);
  CHECK(g.cols == 2);
  CHECK(g.at(0, 0) == Matrix::identity(3));
  CHECK(g.at(0, 1) == Matrix::identity(3));
}

TEST_CASE("normalize") {
  const OneMor i3 = id_one(3);
  const Normalization n = normalize(i3);
  CHECK(n.normal == i3);
  CHECK(n.forward == id_two(i3));
  const OneMor f(1, 1, {{1, 0, 2}});
  const Normalization nf = normalize(f);
  CHECK(nf.normal.at(0, 0) == Decomp{1, 2});
  CHECK(nf.forward.at(0, 0) == Matrix::identity(3));
  CHECK(vcompose2(nf.backward, nf.forward) == id_two(f));
  CHECK(vcompose2(nf.forward, nf.backward) == id_two(nf.normal));
}

TEST_CASE("associator") {
  laws::Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const std::size_t A = rng.between(0, 2), B = rng.between(0, 2), C = rng.between(0, 2), D = rng.between(0, 2);
    const OneMor e = gen_one_mor(rng, small(), A, B), f = gen_one_mor(rng, small(), B, C),
                 r = gen_one_mor(rng, small(), C, D);
    const TwoMor a = associator(r, f, e);
    CHECK(a.src() == hcompose1(hcompose1(r, f), e));
    CHECK(a.tgt() == hcompose1(r, hcompose1(f, e)));
    for (const Matrix& m : a.entries()) {
      REQUIRE(m.rows() == m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        int row_ones = 0, col_ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row_ones += m(i, j).is_one();
          col_ones += m(j, i).is_one();
          CHECK((m(i, j).is_zero() || m(i, j).is_one()));
        }
        CHECK(row_ones == 1);
        CHECK(col_ones == 1);
      }
    }
    CHECK(vcompose2(associator_inv(r, f, e), a) == id_two(a.src()));
    CHECK(associator(id_one(C), f, e).entries() == id_two(hcompose1(hcompose1(id_one(C), f), e)).entries());
  }
}

TEST_CASE("distributor") {
  laws::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t A = rng.between(0, 3), B = rng.between(0, 3), C = rng.between(0, 3);
    const OneMor f = gen_one_mor(rng, small(), B, C);
    const OneMor g = gen_one_mor(rng, small(), A, B), h = gen_one_mor(rng, small(), A, B);
    const Distributor d = distributor(f, g, h);
    const OneMor fg = hcompose1(f, g), fh = hcompose1(f, h);
    CHECK(vcompose2(d.alpha_inv, d.alpha) == id_two(oplus_one(fg, fh)));
    CHECK(vcompose2(d.alpha, d.alpha_inv) == id_two(hcompose1(f, oplus_one(g, h))));
    CHECK(vcompose2(whisker_left(f, local_proj(g, h, Side::first)), d.alpha) == local_proj(fg, fh, Side::first));
    CHECK(vcompose2(whisker_left(f, local_proj(g, h, Side::second)), d.alpha) == local_proj(fg, fh, Side::second));
    CHECK(vcompose2(d.alpha_inv, whisker_left(f, local_inj(g, h, Side::first))) == local_inj(fg, fh, Side::first));
  }
  // h = 0: alpha is the normalizer onto f g.
  const OneMor f(1, 1, {{2}}), g(1, 1, {{1, 1}});
  const Distributor d = distributor(f, g, zero_one(1, 1));
  CHECK(d.alpha.src() == oplus_one(hcompose1(f, g), hcompose1(f, zero_one(1, 1))));
  CHECK(d.alpha.at(0, 0) == Matrix::identity(4));
}

TEST_CASE("invert") {
  const OneMor f(1, 1, {{2}});
  const TwoMor t(f, f, {Matrix{{1, 1}, {0, 1}}});
  CHECK(vcompose2(inverse_of(t), t) == id_two(f));
  const TwoMor s(f, f, {Matrix{{1, 1}, {1, 1}}});
  CHECK_FALSE(invert(s));
  CHECK_THROWS_AS(inverse_of(s), NotInvertible);
}

TEST_CASE("text forms") {
  CHECK(to_string(OneMor(2, 1, {{2, 1}, {}})) == "[[2,1] []]");
  CHECK(to_string(OneMor(0, 1, {})) == "[]");
}
