#include "doctest.h"

#include "twocat/errors.hpp"
#include "twocat/laws.hpp"
#include "twocat/matcat.hpp"

using namespace twocat;
using namespace twocat::matcat;

namespace {

MatMor random_mor(laws::Rng& rng, std::size_t src, std::size_t tgt) {
  return MatMor(laws::gen_matrix(rng, laws::LawConfig{}, tgt, src));
}

}  // namespace

TEST_CASE("compose") {
  laws::Rng rng(1);
  const MatMor f = random_mor(rng, 2, 3);
  CHECK(compose(identity({3}), f) == f);
  const MatMor g = random_mor(rng, 2, 4);
  CHECK(compose(proj({3}, {4}, matcat::Side::first), pair(f, g)) == f);
  const MatMor a = random_mor(rng, 2, 3), b = random_mor(rng, 4, 2);
  CHECK(compose(a, b).mat() == mat_mul(a.mat(), b.mat()));
  CHECK_THROWS_AS(compose(a, a), ShapeError);
  CHECK_THROWS_AS(MatMor({2}, {3}, Matrix(2, 2)), ShapeError);
}

TEST_CASE("projections and injections") {
  CHECK(proj({1}, {1}, matcat::Side::first).mat() == Matrix{{1, 0}});
  CHECK(proj({1}, {1}, matcat::Side::second).mat() == Matrix{{0, 1}});
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      CHECK(compose(proj({n}, {m}, matcat::Side::first), inj({n}, {m}, matcat::Side::first)) == identity({n}));
      CHECK(compose(proj({n}, {m}, matcat::Side::second), inj({n}, {m}, matcat::Side::second)) == identity({m}));
      CHECK(compose(proj({n}, {m}, matcat::Side::first), inj({n}, {m}, matcat::Side::second)) == zero({m}, {n}));
      CHECK(compose(proj({n}, {m}, matcat::Side::second), inj({n}, {m}, matcat::Side::first)) == zero({n}, {m}));
    }
}

TEST_CASE("pair and copair") {
  laws::Rng rng(2);
  const MatMor f = random_mor(rng, 3, 2), g = random_mor(rng, 3, 1);
  CHECK(compose(proj({2}, {1}, matcat::Side::second), pair(f, g)) == g);
  const MatMor h = random_mor(rng, 2, 3), k = random_mor(rng, 4, 3);
  CHECK(compose(copair(h, k), inj({2}, {4}, matcat::Side::second)) == k);
  CHECK(compose(copair(h, k), inj({2}, {4}, matcat::Side::first)) == h);
  CHECK(pair(identity({1}), identity({1})).mat() == Matrix{{1}, {1}});
  CHECK(pair(identity({1}), identity({1})) == diagonal({1}));
  CHECK(codiagonal({2}).mat() == Matrix{{1, 0, 1, 0}, {0, 1, 0, 1}});
}

TEST_CASE("addition via biproduct") {
  const MatMor f(Matrix{{1, 2}, {3, 4}}), g(Matrix{{10, 0}, {0, 10}});
  // Entrywise sum computed directly.
  Matrix expected(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) expected(i, j) = f.mat()(i, j) + g.mat()(i, j);
  CHECK(expected == Matrix{{11, 2}, {3, 14}});
  CHECK(add_via_biproduct(f, g).mat() == expected);
  CHECK(add_via_biproduct(f, zero({2}, {2})) == f);
  laws::Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const MatMor a = random_mor(rng, 3, 3), b = random_mor(rng, 3, 3);
    CHECK(add_via_biproduct(a, b) == add_via_biproduct(b, a));
    CHECK(add_via_biproduct(a, b).mat() == mat_add(a.mat(), b.mat()));
  }
  CHECK_THROWS_AS(add_via_biproduct(MatMor(Matrix(2, 2)), MatMor(Matrix(2, 3))), ShapeError);
}

TEST_CASE("oplus is block diagonal") {
  const MatMor f(Matrix{{1, 2}}), g(Matrix{{3}, {4}});
  CHECK(oplus(f, g).mat() == Matrix{{1, 2, 0}, {0, 0, 3}, {0, 0, 4}});
}

TEST_CASE("canonical r") {
  CHECK(canonical_r({1}, {1}).mat() == Matrix::identity(2));
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      const MatMor r = canonical_r({n}, {m});
      CHECK(compose(compose(proj({n}, {m}, matcat::Side::first), r), inj({n}, {m}, matcat::Side::second)) == zero({m}, {n}));
      CHECK(compose(compose(proj({n}, {m}, matcat::Side::first), r), inj({n}, {m}, matcat::Side::first)) == identity({n}));
      const auto inv = invert(r);
      REQUIRE(inv);
      CHECK(compose(*inv, r) == identity({n + m}));
    }
}

TEST_CASE("divide and conquer product") {
  CHECK(dnc_mul(MatMor(Matrix{{3}}), MatMor(Matrix{{Rational(1, 2)}}), 1).mat() == Matrix{{Rational(3, 2)}});
  laws::Rng rng(4);
  const MatMor a = random_mor(rng, 8, 8), b = random_mor(rng, 8, 8);
  CHECK(dnc_mul(a, b, 2).mat() == mat_mul(a.mat(), b.mat()));
  const MatMor x = random_mor(rng, 5, 7), y = random_mor(rng, 9, 5);
  CHECK(dnc_mul(x, y, 1).mat() == mat_mul(x.mat(), y.mat()));
  CHECK(dnc_mul(x, y, 2).mat() == mat_mul(x.mat(), y.mat()));
  const MatMor e = random_mor(rng, 0, 3), z = random_mor(rng, 4, 0);
  CHECK(dnc_mul(e, z, 1) == zero({4}, {3}));
  CHECK_THROWS_AS(dnc_mul(x, x, 2), ShapeError);
}
