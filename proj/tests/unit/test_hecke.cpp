#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qll/hecke/norm_classes.hpp"
#include "qll/lattice/lattice_s.hpp"

using namespace qll;

namespace {

// Right-unit classes of norm-p elements, computed from the brute-force sphere.
std::set<HurwitzQuaternion> brute_classes(std::int64_t p) {
  std::set<HurwitzQuaternion> reps;
  for (const auto& a : oracle::o_sphere(p)) {
    HurwitzQuaternion best = a;
    for (const auto& u : units()) best = std::min(best, a * u);
    reps.insert(best);
  }
  return reps;
}

bool divisible(const HurwitzQuaternion& x, std::int64_t p) {
  for (auto t : x.doubled())
    if (t % p != 0) return false;
  const auto& t = x.doubled();
  return oracle::in_o(HurwitzQuaternion::from_doubled({t[0] / p, t[1] / p, t[2] / p, t[3] / p}));
}

}  // namespace

TEST_CASE("C_p has p+1 classes of 24 elements") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto& cp = enumerate_cp(p);
    CHECK(cp.representatives.size() == static_cast<std::size_t>(p + 1));
    CHECK(cp.raw_count == static_cast<std::size_t>(24 * (p + 1)));
    for (auto s : cp.orbit_sizes) CHECK(s == 24);
    const auto brute = brute_classes(p);
    CHECK(std::vector<HurwitzQuaternion>(brute.begin(), brute.end()) == cp.representatives);
    CHECK(enumerate_cp_left(p).representatives.size() == static_cast<std::size_t>(p + 1));
  }
  CHECK_THROWS_AS(enumerate_cp(2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cp(9), std::invalid_argument);
}

TEST_CASE("divisibility counts against a direct count") {
  for (std::int64_t p : {3, 5}) {
    const auto reps = brute_classes(p);
    for (std::int64_t n = 2; n <= 120; n += 2)
      for (const auto& beta : enumerate_by_norm(n)) {
        if (!is_primitive(beta)) continue;
        std::int64_t right = 0, left = 0;
        for (const auto& a : reps) {
          right += divisible(beta * a, p);
          left += divisible(a * beta, p);
        }
        const auto r = divisibility_count(beta, p, UnitSide::right);
        const auto l = divisibility_count(beta, p, UnitSide::left);
        CHECK(r.count == right);
        CHECK(l.count == left);
        CHECK(right == (n % p == 0 ? 1 : 0));
        CHECK_FALSE(r.square_divides);
      }
  }
  CHECK_THROWS_AS(divisibility_count(HurwitzQuaternion::varpi().scaled(3), 3, UnitSide::right), std::invalid_argument);
}

TEST_CASE("divisibility sweep") {
  const auto sweep = divisibility_sweep(7, 150);
  CHECK(sweep.passed());
  CHECK(sweep.checked > 0);
}

TEST_CASE("coset counts") {
  for (std::int64_t p : {3, 5, 7}) {
    const auto p2 = p * p;
    for (auto type : {CosetType::odd_a, CosetType::odd_b}) {
      const auto c = coset_counts(type, p);
      CHECK(c.from_lemma == c.oracle);
      CHECK(c.oracle == p2 * p + p2 + p + 1);
    }
    const auto c = coset_counts(CosetType::odd_c, p);
    CHECK(c.from_lemma == c.oracle);
    CHECK(c.oracle == (p2 + 1) * (p2 + p + 1));
    CHECK(count_hyperplanes(p) == gaussian_binomial(4, 1, p));
    CHECK(count_planes(p) == gaussian_binomial(4, 2, p));
  }
  const auto even = coset_counts(CosetType::even, 2);
  CHECK(even.from_lemma == 5);
  CHECK(even.oracle == 5);
  CHECK_THROWS_AS(coset_counts(CosetType::even, 3), std::invalid_argument);
  CHECK(parse_coset_type(to_string(CosetType::odd_c)) == CosetType::odd_c);
}
