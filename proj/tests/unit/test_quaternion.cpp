#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "qll/quaternion/euclid.hpp"
#include "qll/quaternion/generators.hpp"

using namespace qll;

namespace {

HurwitzQuaternion random_hurwitz(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::uniform_int_distribution<int> parity(0, 1);
  const int p = parity(rng);
  HurwitzQuaternion::Coords t;
  for (auto& v : t) v = 2 * dist(rng) + p;
  return HurwitzQuaternion::from_doubled(t);
}

}  // namespace

TEST_CASE("units of O") {
  const auto& us = units();
  CHECK(us.size() == 24);
  CHECK(us == oracle::o_sphere(1));
  for (const auto& u : us) {
    CHECK(u * unit_inverse(u) == HurwitzQuaternion::one());
    CHECK(u.norm_int() == 1);
  }
  CHECK_THROWS_AS(unit_inverse(HurwitzQuaternion::varpi()), std::domain_error);
}

TEST_CASE("quaternion relations") {
  const auto i = HurwitzQuaternion::i(), j = HurwitzQuaternion::j(), k = HurwitzQuaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -HurwitzQuaternion::one());
  CHECK(HurwitzQuaternion::varpi().norm_int() == 2);
  CHECK(HurwitzQuaternion::omega().in_order());
  CHECK_FALSE(HurwitzQuaternion::from_doubled({1, 0, 0, 0}).in_order());
}

TEST_CASE("norm is multiplicative and conjugation anti-commutes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_hurwitz(rng, 20);
    const auto b = random_hurwitz(rng, 20);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * b).conj() == b.conj() * a.conj());
    CHECK((a * b).in_order());
    CHECK((a * b).to_rational() == a.to_rational() * b.to_rational());
  }
}

TEST_CASE("parsing") {
  CHECK(parse_hurwitz("1+i") == HurwitzQuaternion::varpi());
  CHECK(parse_hurwitz("1/2+1/2i+1/2j+1/2k") == HurwitzQuaternion::omega());
  CHECK(parse_hurwitz("k - 3*j") == HurwitzQuaternion::from_integers(0, 0, -3, 1));
  CHECK(parse_hurwitz(HurwitzQuaternion::from_doubled({3, -1, 5, 7}).to_string()) ==
        HurwitzQuaternion::from_doubled({3, -1, 5, 7}));
  CHECK_THROWS_AS(parse_hurwitz("1/3+i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hurwitz("1+q"), std::invalid_argument);
  CHECK(parse_quaternion("1/3+i").coords()[0] == make_rational(1, 3));
}

TEST_CASE("Euclidean right division shrinks the norm") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_hurwitz(rng, 50);
    auto b = random_hurwitz(rng, 10);
    if (b.is_zero()) continue;
    const auto res = euclid_div(a, b);
    CHECK(res.quotient.in_order());
    CHECK(res.quotient * b + res.remainder == a);
    CHECK(res.remainder.norm() < b.norm());
  }
  CHECK_THROWS_AS(euclid_div(HurwitzQuaternion::one(), HurwitzQuaternion()), std::invalid_argument);
}

TEST_CASE("generator words round trip") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(0, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const auto word = random_generator_word(rng, len(rng));
    const auto m = recompose(word);
    CHECK(m.entries_in_order());
    const auto d = generator_decompose(m);
    REQUIRE(d.invertible);
    CHECK(recompose(d.word) == m);
  }
}

TEST_CASE("non-invertible matrices are reported, not thrown") {
  const auto w = HurwitzQuaternion::varpi();
  const auto one = HurwitzQuaternion::one();
  for (const QuaternionMatrix2& m : {QuaternionMatrix2{w, {}, {}, one}, QuaternionMatrix2{one, one, one, one},
                                     QuaternionMatrix2{w, one, HurwitzQuaternion(), w}}) {
    const auto d = generator_decompose(m);
    CHECK_FALSE(d.invertible);
    CHECK(d.residue.has_value());
  }
  const QuaternionMatrix2 outside{HurwitzQuaternion::from_doubled({1, 0, 0, 0}), {}, {}, one};
  CHECK_THROWS_AS(generator_decompose(outside), std::invalid_argument);
}
