#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qll/satake/satake.hpp"

using namespace qll;

TEST_CASE("odd-p identities hold as polynomials in lambda") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const auto rep = verify_hecke_satake_odd(p);
    CHECK(rep.passed());
    CHECK(rep.symmetric.size() == 4);
    CHECK(rep.symmetric[3] == SymbolicValue(1));
  }
  CHECK_THROWS_AS(satake_odd(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(satake_odd(9, 0.0), std::invalid_argument);
}

TEST_CASE("odd-p parameters numerically") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (std::uint64_t p : {3u, 5u, 7u})
    for (int trial = 0; trial < 20; ++trial) {
      const double lambda = dist(rng);
      const auto s = satake_odd(p, lambda);
      REQUIRE(s.values.size() == 4);
      std::complex<double> e1 = 0, prod = 1;
      for (const auto& v : s.values) {
        e1 += v;
        prod *= v;
      }
      const double sp = std::sqrt(static_cast<double>(p));
      CHECK(std::abs(e1 - (sp + 1 / sp) * lambda) < 1e-9);
      CHECK(std::abs(prod - 1.0) < 1e-9);
      CHECK(s.tempered == Temperedness::non_tempered);
      CHECK(cap_match(p, lambda).match);
    }
  CHECK(classify_temperedness(satake_odd_symbolic(3)) == Temperedness::undetermined);
}

TEST_CASE("p = 2 parameters are exact") {
  for (int eps : {1, -1}) {
    const auto rep = verify_satake_two(eps);
    CHECK(rep.passed());
    CHECK(rep.expected == AlgebraicReal::radical(2, -3 * eps));
    CHECK(rep.params.exact.size() == 2);
    CHECK(rep.params.tempered == Temperedness::non_tempered);
  }
  CHECK_THROWS_AS(satake_two(0), std::invalid_argument);
}

TEST_CASE("archimedean record and classification") {
  const auto inf = satake_infinity(1.5);
  CHECK(inf.p == 0);
  CHECK(classify_temperedness(inf) == Temperedness::tempered);
  SatakeParams circle;
  circle.p = 5;
  circle.values = {std::polar(1.0, 0.2), std::polar(1.0, -0.2)};
  CHECK(classify_temperedness(circle) == Temperedness::tempered);
  circle.values[0] *= 1.0 + 1e-6;
  CHECK(classify_temperedness(circle) == Temperedness::non_tempered);
}

TEST_CASE("multiset comparison is order-insensitive and strict") {
  const std::vector<std::complex<double>> a{{1, 2}, {3, 0}, {1, 2}, {-1, 0}};
  const std::vector<std::complex<double>> b{{-1, 0}, {1, 2}, {3, 0}, {1, 2}};
  CHECK(multisets_match(a, b));
  auto c = b;
  c[1] = {3, 0};
  CHECK_FALSE(multisets_match(a, c));
  CHECK_FALSE(multisets_match(a, {{1, 2}}));
}

TEST_CASE("two-power eigenvalues") {
  for (int eps : {1, -1}) {
    CHECK(two_power_eigenvalue(1, eps) == AlgebraicReal::radical(2, -3 * eps));
    for (unsigned n = 0; n <= 10; ++n) {
      const double expected = std::pow(-eps, n) * (std::pow(2.0, 1.5 * n) + std::pow(2.0, 0.5 * n));
      CHECK(std::abs(two_power_eigenvalue(n, eps).to_double() - expected) < 1e-9 * std::abs(expected));
    }
  }
}
