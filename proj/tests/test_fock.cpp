#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "loqs/fock.hpp"
#include "loqs/metrology.hpp"
#include "loqs/netlib.hpp"

using namespace loqs;
using fock::Occupation;

namespace {

UnitaryMatrix bs5050() {
  net::BeamsplitterElement e{0, 1, 0.5, M_PI / 2};
  return net::beamsplitter_unitary(e, 2);
}

double fact(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double norm_factor(const Occupation& occ) {
  double f = 1;
  for (int c : occ) f *= fact(c);
  return std::sqrt(f);
}

}  // namespace

TEST_CASE("enumerate_configurations") {
  const auto c22 = fock::enumerate_configurations(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0] == Occupation{0, 2});
  CHECK(c22[1] == Occupation{1, 1});
  CHECK(c22[2] == Occupation{2, 0});

  const auto c15 = fock::enumerate_configurations(1, 5);
  REQUIRE(c15.size() == 1);
  CHECK(c15[0] == Occupation{5});

  CHECK(fock::enumerate_configurations(4, 3).size() == 20);
  CHECK(fock::configuration_count(4, 3) == 20);

  for (const auto& s : fock::enumerate_configurations(3, 4))
    CHECK(fock::total_photons(s) == 4);

  CHECK_THROWS_AS(fock::enumerate_configurations(30, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS(fock::enumerate_configurations(0, 1), std::invalid_argument);
}

TEST_CASE("amplitude basics") {
  SUBCASE("identity network") {
    UnitaryMatrix id(Matrix::Identity(3, 3));
    CHECK(std::abs(fock::amplitude(id, {1, 1, 0}, {1, 1, 0}) - 1.0) < 1e-12);
  }
  SUBCASE("Hong-Ou-Mandel suppression") {
    CHECK(std::abs(fock::amplitude(bs5050(), {1, 1}, {1, 1})) < 1e-12);
  }
  SUBCASE("MZI (1,1)->(1,1) closed form") {
    for (double phi : {0.0, 0.3, 1.1, 2.9}) {
      const Complex gamma =
          fock::amplitude(metro::mzi_matrix(phi), {1, 1}, {1, 1});
      const Complex expect = -0.5 * (1.0 + std::exp(Complex(0, 2 * phi)));
      CHECK(std::abs(gamma - expect) < 1e-12);
    }
  }
  SUBCASE("rejections") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    CHECK_THROWS_AS(fock::amplitude(id, {1, 0}, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fock::amplitude(id, {1, 0, 0}, {1, 0}),
                    std::invalid_argument);
  }
}

TEST_CASE("output_distribution") {
  SUBCASE("identity point mass") {
    UnitaryMatrix id(Matrix::Identity(3, 3));
    const auto d = fock::output_distribution(id, {1, 0, 1});
    double total = 0;
    for (const auto& [s, p] : d.entries) {
      total += p;
      if (s == Occupation{1, 0, 1})
        CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
      else
        CHECK(p < 1e-12);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("MZI single photon") {
    for (double phi : {0.2, 0.9, 2.4}) {
      const auto d =
          fock::output_distribution(metro::mzi_matrix(phi), {1, 0});
      for (const auto& [s, p] : d.entries) {
        if (s == Occupation{1, 0})
          CHECK(p == doctest::Approx((1 - std::cos(phi)) / 2).epsilon(1e-12));
        if (s == Occupation{0, 1})
          CHECK(p == doctest::Approx((1 + std::cos(phi)) / 2).epsilon(1e-12));
      }
    }
  }
  SUBCASE("MZI photon pair") {
    for (double phi : {0.2, 0.9, 2.4}) {
      const auto d =
          fock::output_distribution(metro::mzi_matrix(phi), {1, 1});
      for (const auto& [s, p] : d.entries) {
        if (s == Occupation{1, 1})
          CHECK(p ==
                doctest::Approx((1 + std::cos(2 * phi)) / 2).epsilon(1e-12));
        if (s == Occupation{2, 0} || s == Occupation{0, 2})
          CHECK(p ==
                doctest::Approx((1 - std::cos(2 * phi)) / 4).epsilon(1e-12));
      }
    }
  }
  SUBCASE("normalization across random instances") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
      const int m = 2 + int(rng() % 5);  // up to 6 modes
      const auto u = net::haar_unitary(m, rng);
      Occupation input(m, 0);
      for (int k = 0; k < 3; ++k) input[rng() % m] += 1;
      const auto d = fock::output_distribution(u, input);
      double total = 0;
      for (const auto& [s, p] : d.entries) total += p;
      CHECK(std::abs(total - 1.0) < 1e-9);
    }
  }
  SUBCASE("permutation covariance") {
    std::mt19937_64 rng(17);
    const auto u = net::haar_unitary(3, rng);
    const Occupation input{2, 1, 0};
    // swap modes 0 and 2 on both the matrix and the input
    Matrix p = Matrix::Zero(3, 3);
    p(0, 2) = p(2, 0) = p(1, 1) = 1;
    UnitaryMatrix up(p * u.mat() * p.transpose());
    const Occupation input_p{0, 1, 2};
    const auto d = fock::output_distribution(u, input);
    const auto dp = fock::output_distribution(up, input_p);
    for (const auto& [s, prob] : d.entries) {
      const Occupation swapped{s[2], s[1], s[0]};
      bool found = false;
      for (const auto& [sp, probp] : dp.entries)
        if (sp == swapped) {
          found = true;
          CHECK(prob == doctest::Approx(probp).epsilon(1e-10));
        }
      CHECK(found);
    }
  }
}

TEST_CASE("sample") {
  SUBCASE("point mass") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    const auto d = fock::output_distribution(id, {1, 0});
    std::mt19937_64 rng(1);
    for (const auto& s : fock::sample(d, 50, rng))
      CHECK(s == Occupation{1, 0});
  }
  SUBCASE("seed determinism") {
    const auto d =
        fock::output_distribution(metro::mzi_matrix(0.7), {1, 1});
    std::mt19937_64 a(42), b(42);
    CHECK(fock::sample(d, 200, a) == fock::sample(d, 200, b));
  }
  SUBCASE("MZI empirical frequency") {
    const auto d =
        fock::output_distribution(metro::mzi_matrix(M_PI / 4), {1, 1});
    std::mt19937_64 rng(7);
    const auto draws = fock::sample(d, 100000, rng);
    int hits = 0;
    for (const auto& s : draws)
      if (s == Occupation{1, 1}) ++hits;
    CHECK(std::abs(hits / 100000.0 - 0.5) < 0.01);
  }
}

TEST_CASE("polynomial_oracle") {
  SUBCASE("identity single term") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    const auto poly = fock::polynomial_oracle(id, {1, 1});
    REQUIRE(poly.size() == 1);
    CHECK(std::abs(poly.at({1, 1}) - Complex(1, 0)) < 1e-12);
  }
  SUBCASE("50:50 beamsplitter single photon") {
    const auto poly = fock::polynomial_oracle(bs5050(), {1, 0});
    REQUIRE(poly.size() == 2);
    CHECK(std::abs(poly.at({1, 0}) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
    CHECK(std::abs(poly.at({0, 1}) - Complex(0, 1 / std::sqrt(2.0))) < 1e-12);
  }
  SUBCASE("cross-oracle agreement on a random 4-mode network") {
    std::mt19937_64 rng(12);
    const auto u = net::haar_unitary(4, rng);
    const Occupation input{1, 1, 0, 0};
    const auto poly = fock::polynomial_oracle(u, input);
    int checked = 0;
    for (const auto& s : fock::enumerate_configurations(4, 2)) {
      const auto it = poly.find(s);
      const Complex coeff = it == poly.end() ? Complex(0, 0) : it->second;
      const Complex via_poly = coeff * norm_factor(s) / norm_factor(input);
      CHECK(std::abs(via_poly - fock::amplitude(u, input, s)) < 1e-10);
      ++checked;
    }
    CHECK(checked == 10);
  }
  SUBCASE("guard") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    CHECK_THROWS_AS(fock::polynomial_oracle(id, {4, 3}),
                    std::invalid_argument);
  }
}

TEST_CASE("truncated_evolution") {
  SUBCASE("identity leaves the state unchanged") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    std::map<Occupation, Complex> state{{{1, 0}, Complex(0.6, 0)},
                                        {{0, 2}, Complex(0, 0.8)}};
    const auto out = fock::truncated_evolution(id, state, 4);
    REQUIRE(out.size() == 2);
    CHECK(std::abs(out.at({1, 0}) - Complex(0.6, 0)) < 1e-12);
    CHECK(std::abs(out.at({0, 2}) - Complex(0, 0.8)) < 1e-12);
  }
  SUBCASE("sector norm preservation") {
    std::mt19937_64 rng(3);
    const auto u = net::haar_unitary(3, rng);
    std::map<Occupation, Complex> state{{{2, 1, 0}, Complex(1, 0)}};
    const auto out = fock::truncated_evolution(u, state, 5);
    double norm = 0;
    for (const auto& [s, c] : out) norm += std::norm(c);
    CHECK(std::abs(norm - 1.0) < 1e-9);
  }
  SUBCASE("squeezed-vacuum tail bound through a beamsplitter") {
    const double r = 0.5;
    const int cutoff = 12;
    std::map<Occupation, Complex> state;
    // squeezed-vacuum coefficients into one beamsplitter port, vacuum into
    // the other; the kept pairs carry weight tanh^{2m} so the dropped tail
    // is geometric in tanh^2
    const double th = std::tanh(r), ch = std::cosh(r);
    std::vector<double> c(cutoff + 1, 0.0);
    c[0] = 1.0 / std::sqrt(ch);
    for (int m = 1; 2 * m <= cutoff; ++m)
      c[2 * m] = c[2 * m - 2] * (-0.5) * th *
                 std::sqrt(double(2 * m) * (2 * m - 1)) / m;
    for (int a = 0; a <= cutoff; a += 2) state[{a, 0}] = c[a];
    const auto out = fock::truncated_evolution(bs5050(), state, cutoff);
    double norm = 0;
    for (const auto& [s, amp] : out) norm += std::norm(amp);
    CHECK(norm <= 1.0 + 1e-12);
    CHECK(1.0 - norm <= std::pow(th, double(cutoff)) + 1e-9);
  }
  SUBCASE("guards") {
    UnitaryMatrix id(Matrix::Identity(2, 2));
    std::map<Occupation, Complex> state{{{3, 0}, Complex(1, 0)}};
    CHECK_THROWS_AS(fock::truncated_evolution(id, state, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("total_variation") {
  const auto d = fock::output_distribution(metro::mzi_matrix(0.4), {1, 1});
  CHECK(fock::total_variation(d, d) == doctest::Approx(0.0));

  fock::FockDistribution p, q, r;
  p.mode_count = q.mode_count = r.mode_count = 2;
  p.photon_total = q.photon_total = r.photon_total = 1;
  p.entries = {{{0, 1}, 1.0}};
  q.entries = {{{1, 0}, 1.0}};
  CHECK(fock::total_variation(p, q) == doctest::Approx(1.0));

  r.entries = {{{0, 1}, 0.5}, {{1, 0}, 0.5}};
  CHECK(fock::total_variation(r, q) == doctest::Approx(0.5));

  fock::FockDistribution bad = p;
  bad.mode_count = 3;
  CHECK_THROWS_AS(fock::total_variation(p, bad), std::invalid_argument);
}

TEST_CASE("validate_bs_instance") {
  const auto a = fock::validate_bs_instance(100, 10, true);
  CHECK(a.birthday_ok);
  CHECK_FALSE(a.hiding_ok);

  const auto b = fock::validate_bs_instance(2, 1, true);
  CHECK(b.birthday_ok);
  CHECK(b.hiding_ok);

  const auto c = fock::validate_bs_instance(1000000, 9, true);
  CHECK(c.birthday_ok);
  CHECK(c.hiding_ok);

  CHECK_THROWS_AS(fock::validate_bs_instance(0, 1, false),
                  std::invalid_argument);
}

TEST_CASE("distribution json serialization") {
  UnitaryMatrix id(Matrix::Identity(2, 2));
  const auto d = fock::output_distribution(id, {1, 0});
  const std::string j = fock::distribution_to_json(d);
  CHECK(j.find("\"m\":2") != std::string::npos);
  CHECK(j.find("\"n\":1") != std::string::npos);
  CHECK(j.find("\"entries\"") != std::string::npos);
}
