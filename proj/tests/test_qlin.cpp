#include "doctest.h"

#include <random>

#include "support.hpp"
#include "tpg/qlin.hpp"

using namespace tpg::qlin;

TEST_CASE("rationals are canonical and print as p/q") {
  CHECK(to_string(ratio(6, -4)) == "-3/2");
  CHECK(to_string(ratio(10, 5)) == "2");
  CHECK(to_string(ratio(0, 7)) == "0");
  CHECK(parse_rational("-12/8") == ratio(-3, 2));
  CHECK(parse_rational(" 875/524288 ") == ratio(875, 524288));
  CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long q = d(rng);
    if (q == 0) q = 1;
    const Rational r = ratio(d(rng), q);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("vector and matrix arithmetic") {
  const Vector u{1, ratio(1, 2), -2};
  const Vector v{ratio(1, 3), 0, 1};
  CHECK(dot(u, v) == ratio(-5, 3));
  CHECK((u + v)[0] == ratio(4, 3));
  CHECK((ratio(2) * u)[1] == 1);
  CHECK_THROWS_AS(dot(u, Vector(2)), DimensionError);

  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(a * Vector{1, 1} == Vector{3, 7});
}

TEST_CASE("row reduction, rank and kernel") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK((m * ker[0]).is_zero());
  CHECK(ker[0][2] == 1);

  const auto e = row_reduce(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.rref(0, 0) == 1);
  CHECK(e.rref(1, 1) == 1);
  CHECK(e.rref(2, 2) == 0);
}

TEST_CASE("solve and inverse agree with a cofactor oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a(4, 4);
    std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(4));
    for (std::size_t i = 0; i < 4; ++i) {
      const auto r = tpg::oracle::random_vector(rng, 4);
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = rows[i][j] = r[j];
    }
    if (tpg::oracle::det(rows) == 0) {
      CHECK_THROWS_AS(inverse(a), std::domain_error);
      continue;
    }
    CHECK(a * inverse(a) == Matrix::identity(4));
    const auto b = tpg::oracle::random_vector(rng, 4);
    CHECK(a * solve(a, b) == b);
  }
}

TEST_CASE("eigenspace of a triangular matrix") {
  const Matrix m{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  CHECK(eigenspace(m, 2).size() == 1);
  CHECK(eigenspace(m, 3).size() == 1);
  CHECK(eigenspace(m, 5).empty());
  CHECK_THROWS_AS(eigenspace(Matrix(2, 3), 1), DimensionError);
}

TEST_CASE("exact PSD test matches principal minors") {
  CHECK(is_psd(Matrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(is_psd(Matrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(is_psd(Matrix{{0, 1}, {1, 0}}));
  CHECK(is_psd(Matrix{{0, 0}, {0, 0}}));
  CHECK_THROWS_AS(is_psd(Matrix{{1, 2}, {0, 1}}), std::invalid_argument);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = tpg::oracle::random_vector(rng, n);
      for (std::size_t j = 0; j < n; ++j) b(i, j) = r[j];
    }
    Matrix g = b.transpose() * b;
    // Half the trials push one diagonal entry down to break definiteness.
    if (trial % 2) g(0, 0) -= ratio(trial % 7 + 1, 2);
    CHECK(is_psd(g) == tpg::oracle::psd_by_minors(g));
  }
}
