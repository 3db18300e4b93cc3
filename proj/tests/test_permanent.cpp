#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "loqs/permanent.hpp"

using namespace loqs;
using perm::permanent_definitional;
using perm::permanent_fast;
using perm::permanent_laplace;
using perm::rel_err;

namespace {
Matrix random_complex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}
}  // namespace

TEST_CASE("permanent_definitional basics") {
  CHECK(std::abs(permanent_definitional(Matrix::Identity(3, 3)) - 1.0) <
        1e-15);

  Matrix ones = Matrix::Ones(2, 2);
  CHECK(std::abs(permanent_definitional(ones) - 2.0) < 1e-15);

  // Hong-Ou-Mandel zero of the 50:50 block
  const double s = 1.0 / std::sqrt(2.0);
  Matrix bs(2, 2);
  bs << Complex(s, 0), Complex(0, s), Complex(0, s), Complex(s, 0);
  CHECK(std::abs(permanent_definitional(bs)) < 1e-15);

  CHECK_THROWS_AS(permanent_definitional(Matrix::Ones(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(permanent_definitional(Matrix::Identity(10, 10)),
                  std::invalid_argument);
}

TEST_CASE("permanent_laplace basics") {
  Matrix one(1, 1);
  one(0, 0) = 5.0;
  CHECK(std::abs(permanent_laplace(one) - 5.0) < 1e-15);

  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(std::abs(permanent_laplace(m) - 10.0) < 1e-15);

  std::mt19937_64 rng(1);
  const Matrix r = random_complex(6, rng);
  CHECK(rel_err(permanent_laplace(r), permanent_definitional(r)) < 1e-12);

  CHECK_THROWS_AS(permanent_laplace(Matrix::Identity(12, 12)),
                  std::invalid_argument);
}

TEST_CASE("permanent_fast basics") {
  CHECK(std::abs(permanent_fast(Matrix::Identity(10, 10)) - 1.0) < 1e-12);

  // perm(J_n) = n!
  double fact = 1.0;
  for (int n = 1; n <= 12; ++n) {
    fact *= n;
    CHECK(rel_err(permanent_fast(Matrix::Ones(n, n)), Complex(fact, 0)) <
          1e-12);
  }

  std::mt19937_64 rng(2);
  const Matrix r = random_complex(7, rng);
  CHECK(rel_err(permanent_fast(r), permanent_definitional(r)) < 1e-10);

  CHECK_THROWS_AS(permanent_fast(Matrix::Identity(31, 31)),
                  std::invalid_argument);
}

TEST_CASE("three-algorithm agreement on 500 seeded matrices") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> size(2, 7);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const Matrix m = random_complex(size(rng), rng);
    const Complex pd = permanent_definitional(m);
    const Complex pl = permanent_laplace(m);
    const Complex pf = permanent_fast(m);
    worst = std::max({worst, rel_err(pd, pl), rel_err(pd, pf)});
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const int n = 5;
    const Matrix m = random_complex(n, rng);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Matrix rows(n, n), cols(n, n);
    for (int i = 0; i < n; ++i) {
      rows.row(i) = m.row(p[i]);
      cols.col(i) = m.col(p[i]);
    }
    const Complex base = permanent_fast(m);
    CHECK(rel_err(permanent_fast(rows), base) < 1e-12);
    CHECK(rel_err(permanent_fast(cols), base) < 1e-12);
  }
}

TEST_CASE("multilinearity in rows") {
  std::mt19937_64 rng(6);
  const Matrix m = random_complex(5, rng);
  Matrix scaled = m;
  const Complex c(1.7, -0.3);
  scaled.row(2) *= c;
  CHECK(rel_err(permanent_fast(scaled), c * permanent_fast(m)) < 1e-12);
}

TEST_CASE("conjugate symmetry") {
  std::mt19937_64 rng(7);
  const Matrix m = random_complex(6, rng);
  CHECK(rel_err(permanent_fast(m.conjugate()),
                std::conj(permanent_fast(m))) < 1e-12);
}

TEST_CASE("build_repeated_matrix") {
  Matrix u(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u(i, j) = Complex(10 * (i + 1) + j + 1, 0);

  SUBCASE("worked example k=(1,0,3), s=(2,1,1)") {
    perm::RepeatedRowSpec spec{{1, 0, 3}, {2, 1, 1}};
    const Matrix r = perm::build_repeated_matrix(u, spec);
    REQUIRE(r.rows() == 4);
    REQUIRE(r.cols() == 4);
    Matrix expect(4, 4);
    expect << u(0, 0), u(0, 0), u(0, 1), u(0, 2),
              u(2, 0), u(2, 0), u(2, 1), u(2, 2),
              u(2, 0), u(2, 0), u(2, 1), u(2, 2),
              u(2, 0), u(2, 0), u(2, 1), u(2, 2);
    CHECK((r - expect).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("all-single occupation returns the source") {
    perm::RepeatedRowSpec spec{{1, 1, 1}, {1, 1, 1}};
    CHECK((perm::build_repeated_matrix(u, spec) - u).cwiseAbs().maxCoeff() ==
          0.0);
  }
  SUBCASE("bunched input doubles a row") {
    Matrix v(2, 2);
    v << 1, 2, 3, 4;
    perm::RepeatedRowSpec spec{{2, 0}, {1, 1}};
    const Matrix r = perm::build_repeated_matrix(v, spec);
    Matrix expect(2, 2);
    expect << 1, 2, 1, 2;
    CHECK((r - expect).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(permanent_fast(r) - 2.0 * v(0, 0) * v(0, 1)) < 1e-12);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(perm::build_repeated_matrix(
                        u, perm::RepeatedRowSpec{{1, 0, 0}, {0, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        perm::build_repeated_matrix(u, perm::RepeatedRowSpec{{1, 0}, {1, 0}}),
        std::invalid_argument);
  }
}

TEST_CASE("rel_err convention") {
  CHECK(rel_err(Complex(0, 0), Complex(1e-12, 0)) == doctest::Approx(1e-12));
  CHECK(rel_err(Complex(100, 0), Complex(101, 0)) ==
        doctest::Approx(1.0 / 101.0));
}
