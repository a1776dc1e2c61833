#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "qll/lattice/lattice_s.hpp"
#include "qll/number/arith.hpp"

using namespace qll;

namespace {

std::int64_t sigma(std::uint64_t n) {
  std::int64_t s = 0;
  for (auto d : divisors(n)) s += static_cast<std::int64_t>(d);
  return s;
}

std::vector<HurwitzQuaternion> sorted(std::vector<HurwitzQuaternion> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("S equals varpi O and has index 4") {
  CHECK(verify_s_equals_w2O());
  CHECK(same_lattice(varpi_times_o_basis(true), varpi_times_o_basis(false)));
  CHECK(basis_determinant(o_basis()) == 8);
  CHECK(basis_determinant(s_basis()) == 32);
  CHECK_FALSE(same_lattice(s_basis(), o_basis()));
}

TEST_CASE("membership in S agrees with the brute-force test") {
  for (std::int64_t a = -7; a <= 7; ++a)
    for (std::int64_t b = -7; b <= 7; ++b)
      for (std::int64_t c = -7; c <= 7; ++c)
        for (std::int64_t d = -7; d <= 7; ++d) {
          const auto x = HurwitzQuaternion::from_doubled({a, b, c, d});
          CHECK(s_membership(x) == oracle::in_s(x));
        }
}

TEST_CASE("dual pairing") { CHECK(dual_pairing_check(8)); }

TEST_CASE("O spheres: brute force and the 24 sigma(odd) count") {
  for (std::int64_t m = 1; m <= 40; ++m) {
    const auto& lib = enumerate_o_by_norm(m);
    CHECK(lib == sorted(oracle::o_sphere(m)));
    CHECK(static_cast<std::int64_t>(lib.size()) == 24 * sigma(odd_part(static_cast<std::uint64_t>(m))));
  }
}

TEST_CASE("S spheres: brute force and the varpi construction") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::vector<HurwitzQuaternion> brute;
    for (const auto& x : oracle::o_sphere(n))
      if (oracle::in_s(x)) brute.push_back(x);
    CHECK(enumerate_by_norm(n) == sorted(brute));
    CHECK(enumerate_by_norm_via_varpi(n) == enumerate_by_norm(n));
    if (n % 2 == 1) CHECK(enumerate_by_norm(n).empty());
  }
}

TEST_CASE("primitive decomposition matches the oracle and reconstructs beta") {
  for (std::int64_t n = 2; n <= 200; n += 2)
    for (const auto& beta : enumerate_by_norm(n)) {
      const auto dec = primitive_decompose(beta);
      const auto ref = oracle::decompose(beta);
      CHECK(dec.u == ref.u);
      CHECK(dec.d == ref.d);
      CHECK(is_primitive(dec.beta0));
      auto back = dec.beta0.scaled(dec.d);
      for (unsigned k = 0; k < dec.u; ++k) back = HurwitzQuaternion::varpi() * back;
      CHECK(back == beta);
    }
  CHECK_THROWS_AS(primitive_decompose(HurwitzQuaternion::one()), std::invalid_argument);
  CHECK_THROWS_AS(primitive_decompose(HurwitzQuaternion()), std::invalid_argument);
}

TEST_CASE("varpi division and valuation") {
  const auto w = HurwitzQuaternion::varpi();
  const auto x = HurwitzQuaternion::from_doubled({3, 1, -1, 5});
  CHECK(divide_by_varpi_left(w * x) == x);
  CHECK(divide_by_varpi_right(x * w) == x);
  CHECK_FALSE(divide_by_varpi_left(x).has_value());
  CHECK(varpi_valuation(w * w * w * x) == 3);
  CHECK(varpi_valuation(HurwitzQuaternion::one().scaled(8)) == 6);
  CHECK(is_primitive(w));
  CHECK_FALSE(is_primitive(w.scaled(3)));
  CHECK_FALSE(is_primitive(w * w));
}
