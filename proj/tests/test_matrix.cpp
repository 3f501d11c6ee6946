#include <doctest.h>

#include <random>

#include "confpoly/matrix.hpp"
#include "helpers.hpp"

using namespace confpoly;
using confpoly::testing::cofactor_det;
using confpoly::testing::mat;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool fractions) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = fractions ? Rational(num(rng), den(rng)) : Rational(num(rng));
  return m;
}

std::vector<Rational> kernel_row(const RatMatrix& k, int r) {
  std::vector<Rational> v(k.cols);
  for (int c = 0; c < k.cols; ++c) v[c] = k.at(r, c);
  return v;
}

void check_annihilates(const RatMatrix& m, const RatMatrix& ker) {
  for (int r = 0; r < ker.rows; ++r) {
    for (int i = 0; i < m.rows; ++i) {
      Rational dot = 0;
      for (int j = 0; j < m.cols; ++j) dot += m.at(i, j) * ker.at(r, j);
      CHECK(dot.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      RatMatrix m = random_matrix(rng, n, n, trial % 2 == 1);
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(det(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("determinant hand values") {
  CHECK(det(RatMatrix(0, 0)) == Rational(1));
  CHECK(det(mat({{1, 1}, {0, -1}})) == Rational(-1));
  CHECK(det(mat({{1, 0}, {-1, 2}})) == Rational(2));
  CHECK(det(mat({{1, 2}, {2, 4}})) == Rational(0));
  CHECK(det(RatMatrix::identity(4)) == Rational(1));
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), ArgumentError);
  // determinant is multiplicative
  RatMatrix a = mat({{2, Rational(1, 2)}, {-1, 3}});
  RatMatrix b = mat({{0, 1}, {5, Rational(-2, 3)}});
  CHECK(det(matmul(a, b)) == det(a) * det(b));
}

TEST_CASE("transpose, matmul, submatrix basics") {
  RatMatrix m = mat({{1, 2, 3}, {4, 5, 6}});
  CHECK(transpose(m).at(2, 1) == Rational(6));
  CHECK(transpose(transpose(m)) == m);
  RatMatrix sub = submatrix(m, {1}, {0, 2});
  CHECK(sub == mat({{4, 6}}));
  CHECK(matmul(RatMatrix::identity(2), m) == m);
}

TEST_CASE("rank and kernel satisfy rank-nullity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0);
    int r = rank(m);
    RatMatrix ker = kernel(m);
    CHECK(ker.cols == cols);
    CHECK(r + ker.rows == cols);
    check_annihilates(m, ker);
    CHECK(rank(transpose(m)) == r);
  }
  CHECK(rank(mat({{1, 0, 0}, {0, 0, 0}})) == 1);
  CHECK(kernel(RatMatrix::identity(3)).rows == 0);
}

TEST_CASE("linear solve handles consistent and inconsistent systems") {
  RatMatrix m = mat({{1, 2}, {3, 4}});
  auto x = solve(m, {Rational(5), Rational(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(-4));
  CHECK((*x)[1] == Rational(9, 2));

  RatMatrix sing = mat({{1, 1}, {2, 2}});
  CHECK_FALSE(solve(sing, {Rational(1), Rational(3)}).has_value());
  auto y = solve(sing, {Rational(1), Rational(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rational(1));
}

TEST_CASE("lattice kernel returns saturated primitive bases") {
  // kernel of [[1,1,0],[1,-1,1]] is spanned by (1,-1,-2)
  RatMatrix k1 = lattice_kernel(mat({{1, 1, 0}, {1, -1, 1}}));
  REQUIRE(k1.rows == 1);
  CHECK(kernel_row(k1, 0) == std::vector<Rational>{1, -1, -2});

  // kernel of [2 4] is spanned by (2,-1), not (4,-2)
  RatMatrix k2 = lattice_kernel(mat({{2, 4}}));
  REQUIRE(k2.rows == 1);
  CHECK(kernel_row(k2, 0) == std::vector<Rational>{2, -1});

  // rational entries are fine; answer is still an integral primitive vector
  RatMatrix k3 = lattice_kernel(mat({{Rational(1, 2), Rational(3, 4)}}));
  REQUIRE(k3.rows == 1);
  CHECK(kernel_row(k3, 0) == std::vector<Rational>{3, -2});

  CHECK(lattice_kernel(RatMatrix::identity(2)).rows == 0);
}

TEST_CASE("lattice kernel annihilates, is integral, and has full nullity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 3);
    int cols = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = random_matrix(rng, rows, cols, trial % 4 == 0);
    RatMatrix ker = lattice_kernel(m);
    CHECK(ker.rows == cols - rank(m));
    check_annihilates(m, ker);
    for (int r = 0; r < ker.rows; ++r) {
      Rational first_nonzero = 0;
      for (int c = 0; c < ker.cols; ++c) {
        CHECK(ker.at(r, c).den() == 1);
        if (first_nonzero.is_zero()) first_nonzero = ker.at(r, c);
      }
      CHECK(first_nonzero > Rational(0));
    }
  }
}

TEST_CASE("lattice kernel basis is unimodularly complete") {
  // every integer vector of the rational kernel must be an integer combination
  // of the returned basis; check two integer kernel vectors of [6 10 15]
  RatMatrix ker = lattice_kernel(mat({{6, 10, 15}}));
  REQUIRE(ker.rows == 2);
  RatMatrix cols = transpose(ker);
  for (std::vector<Rational> target :
       {std::vector<Rational>{5, -3, 0}, std::vector<Rational>{0, 3, -2}}) {
    auto coeff = solve(cols, target);
    REQUIRE(coeff.has_value());
    for (const auto& x : *coeff) CHECK(x.den() == 1);
  }
}

TEST_CASE("row span queries") {
  RatMatrix m = mat({{1, 0, 1}, {0, 1, 1}});
  CHECK(row_span_contains(m, mat({{2, -3, -1}})));
  CHECK_FALSE(row_span_contains(m, mat({{0, 0, 1}})));
  RatMatrix scaled = mat({{2, 0, 2}, {0, -1, -1}});
  CHECK(same_row_span(m, scaled));
  CHECK_FALSE(same_row_span(m, mat({{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("symbolic determinant matches numeric determinant after evaluation") {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= 4; ++n) {
    // entries are random linear forms in three variables
    std::vector<std::vector<Polynomial>> entries(n, std::vector<Polynomial>(n, Polynomial(3)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int v = 0; v < 3; ++v)
          entries[r][c] = entries[r][c] + Rational(static_cast<int>(rng() % 5) - 2) *
                                              Polynomial::variable(3, v);
    Polynomial d = det_poly(entries);
    std::vector<Rational> a{Rational(1, 2), Rational(-2), Rational(3)};
    RatMatrix numeric(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) numeric.at(r, c) = entries[r][c].eval(a);
    CHECK(d.eval(a) == det(numeric));
  }
}

TEST_CASE("symbolic determinant of a symmetric 2x2") {
  std::vector<std::vector<Polynomial>> m(2, std::vector<Polynomial>(2, Polynomial(3)));
  m[0][0] = Polynomial::variable(3, 0);
  m[0][1] = m[1][0] = Polynomial::variable(3, 1);
  m[1][1] = Polynomial::variable(3, 2);
  CHECK(det_poly(m).str() == "A1*A3 - A2^2");
}
