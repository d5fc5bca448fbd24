#include "doctest.h"

#include <sstream>

#include "twocat/errors.hpp"
#include "twocat/laws.hpp"
#include "twocat/matrix.hpp"

using namespace twocat;

namespace {

// Schoolbook product written against raw indices, independent of mat_mul.
Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Matrix random_matrix(laws::Rng& rng, std::size_t r, std::size_t c) {
  return laws::gen_matrix(rng, laws::LawConfig{}, r, c);
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  std::ostringstream s;
  s << Rational(-2, 6);
  CHECK(s.str() == "-1/3");
}

TEST_CASE("rational stays exact through long products") {
  Rational p(1);
  for (long k = 1; k <= 40; ++k) p *= Rational(k + 1, k);
  CHECK(p == Rational(41));
  Rational big(1);
  for (int k = 0; k < 100; ++k) big *= Rational(3, 2);
  CHECK(big.numerator() > mpz_class(1) << 150);
}

TEST_CASE("mat_mul examples") {
  CHECK(mat_mul(Matrix::identity(2), Matrix{{2, 3}, {4, 5}}) == Matrix{{2, 3}, {4, 5}});
  const Matrix f{{1, 2, 3}}, g{{4, 5, 6}};
  CHECK(mat_mul(Matrix{{1, 0}}, vstack(f, g)) == f);
  const Matrix e = mat_mul(Matrix(0, 3), Matrix(3, 2));
  CHECK(e.rows() == 0);
  CHECK(e.cols() == 2);
  CHECK(mat_mul(Matrix(2, 0), Matrix(0, 3)) == Matrix::zero(2, 3));
  CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), ShapeError);
}

TEST_CASE("mat_mul agrees with naive product") {
  laws::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t a = rng.between(0, 5), b = rng.between(0, 5), c = rng.between(0, 5);
    const Matrix x = random_matrix(rng, a, b), y = random_matrix(rng, b, c);
    CHECK(mat_mul(x, y) == naive_mul(x, y));
  }
}

TEST_CASE("kron examples") {
  const Matrix m{{1, 2}, {3, Rational(1, 2)}};
  CHECK(kron(Matrix{{2}}, m) == scale(2, m));
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  const Matrix k = kron(Matrix{{1, 2}}, Matrix{{1}, {10}});
  CHECK(k == Matrix{{1, 2}, {10, 20}});
}

TEST_CASE("kron mixed product property") {
  laws::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
  }
}

TEST_CASE("kron entrywise definition") {
  laws::Rng rng(6);
  const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c) CHECK(k(i * 3 + r, j * 2 + c) == a(i, j) * b(r, c));
}

TEST_CASE("direct_sum examples") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(direct_sum(Matrix(0, 0), m) == m);
  CHECK(direct_sum(Matrix{{1}}, Matrix{{2}}) == Matrix{{1, 0}, {0, 2}});
  CHECK(direct_sum(Matrix(0, 2), Matrix(1, 0)) == Matrix::zero(1, 2));
  laws::Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 1, 2);
    const Matrix c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 4);
    CHECK(mat_mul(direct_sum(a, b), direct_sum(c, d)) == direct_sum(mat_mul(a, c), mat_mul(b, d)));
  }
}

TEST_CASE("add, identity, zero and stacking") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(mat_add(m, Matrix::zero(2, 2)) == m);
  CHECK(mat_sub(m, m).is_zero());
  CHECK(Matrix::identity(0).rows() == 0);
  CHECK(Matrix::identity(0).cols() == 0);
  CHECK(vstack(Matrix{{1, 0}}, Matrix{{0, 1}}) == Matrix::identity(2));
  CHECK(hstack(Matrix{{1}, {0}}, Matrix{{0}, {1}}) == Matrix::identity(2));
  CHECK_THROWS_AS(mat_add(Matrix(1, 2), Matrix(2, 1)), ShapeError);
  CHECK_THROWS_AS(vstack(Matrix(1, 2), Matrix(1, 3)), ShapeError);
}

TEST_CASE("blocks and transpose") {
  Matrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.block(0, 1, 2, 2) == Matrix{{2, 3}, {5, 6}});
  CHECK(m.transpose() == Matrix{{1, 4}, {2, 5}, {3, 6}});
  m.set_block(1, 0, Matrix{{0, 0}});
  CHECK(m == Matrix{{1, 2, 3}, {0, 0, 6}});
  CHECK_THROWS_AS(m.block(1, 1, 2, 1), ShapeError);
}

TEST_CASE("block_kron with unit parts is kron") {
  laws::Rng rng(8);
  const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 2);
  const std::vector<std::size_t> r2{1, 1}, r3{1, 1, 1};
  CHECK(block_kron(a, r2, r3, b, r2, r2) == kron(a, b));
  const std::vector<std::size_t> whole_a_r{2}, whole_a_c{3}, whole_b{2};
  CHECK(block_kron(a, whole_a_r, whole_a_c, b, whole_b, whole_b) == kron(a, b));
}

TEST_CASE("block_kron layout") {
  // a split 1|1 rows, 2 columns; b whole. Row blocks (c, d) ordered c-major.
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{5}, {6}};
  const std::vector<std::size_t> ar{1, 1}, ac{2}, br{2}, bc{1};
  const Matrix k = block_kron(a, ar, ac, b, br, bc);
  CHECK(k == kron(a, b));
  // a split 1|1 columns, b split 1|1 columns: column blocks (x, y) are x-major.
  const Matrix c{{1, 2}};
  const Matrix d{{10, 20}};
  const std::vector<std::size_t> one{1}, two{1, 1};
  const Matrix bk = block_kron(c, one, two, d, one, two);
  CHECK(bk == Matrix{{10, 20, 20, 40}});
}

TEST_CASE("inverse") {
  const Matrix m{{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(mat_mul(m, *inv) == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK_FALSE(inverse(Matrix(2, 3)));
  CHECK(inverse(Matrix(0, 0)) == Matrix(0, 0));
  laws::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = laws::gen_invertible(rng, laws::LawConfig{}, 4);
    const auto ai = inverse(a);
    REQUIRE(ai);
    CHECK(mat_mul(*ai, a) == Matrix::identity(4));
  }
}

TEST_CASE("matrix text") {
  CHECK(to_string(Matrix{{1, 0}, {0, Rational(1, 2)}}) == "{1 0; 0 1/2}");
  CHECK(to_string(Matrix(0, 3)) == "{}");
}
