#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qll/quaternion/hurwitz.hpp"

namespace qll {

enum class UnitSide { left, right };

/// Norm-p elements of O modulo units on one side, with canonical representatives.
struct NormPClasses {
  std::int64_t p = 0;
  UnitSide side = UnitSide::right;
  /// Lexicographically least element of each orbit, sorted.
  std::vector<HurwitzQuaternion> representatives;
  /// Orbit size for each representative.
  std::vector<std::size_t> orbit_sizes;
  std::size_t raw_count = 0;
};

/// Right-unit classes (alpha ~ alpha u) for an odd prime p; cached.
/// Throws std::invalid_argument for p = 2 or composite p.
const NormPClasses& enumerate_cp(std::int64_t p);
/// Left-unit classes (alpha ~ u alpha); used for symmetry checks.
NormPClasses enumerate_cp_left(std::int64_t p);

/// gamma / p lies in O.
bool divides(std::int64_t p, const HurwitzQuaternion& gamma);

struct DivisibilityCount {
  std::int64_t count = 0;
  /// Some product was divisible by p^2.
  bool square_divides = false;
};

/// #{alpha in C_p : p | beta alpha} (right) or #{alpha : p | alpha beta} (left).
/// Throws std::invalid_argument if beta is not primitive or p is not an odd prime.
DivisibilityCount divisibility_count(const HurwitzQuaternion& beta, std::int64_t p, UnitSide side);

enum class CosetType { odd_a, odd_b, odd_c, even };

struct CosetCounts {
  std::int64_t from_lemma = 0;
  std::int64_t oracle = 0;
};

/// Total single-coset count predicted by the explicit double-coset families,
/// against an independent count. Throws std::invalid_argument on a mismatched (type, p).
CosetCounts coset_counts(CosetType type, std::int64_t p);

CosetType parse_coset_type(const std::string& text);
std::string to_string(CosetType type);

/// Number of hyperplanes of F_p^4, by enumeration of normalized functionals.
std::int64_t count_hyperplanes(std::int64_t p);
/// Number of 2-dimensional subspaces of F_p^4, by enumeration of 2x4 matrices in RREF.
std::int64_t count_planes(std::int64_t p);
/// Gaussian binomial [n choose k]_p.
std::int64_t gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t p);

struct DivisibilityWitness {
  HurwitzQuaternion beta;
  UnitSide side = UnitSide::right;
  std::int64_t count = 0;
  std::int64_t expected = 0;
  bool square_divides = false;
};

struct DivisibilitySweep {
  std::int64_t p = 0;
  std::int64_t norm_bound = 0;
  /// Primitive beta examined (each on both sides).
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t square_hits = 0;
  std::vector<DivisibilityWitness> witnesses;
  bool passed() const { return mismatches == 0 && square_hits == 0; }
};

/// For every primitive beta in S with nu(beta) <= norm_bound: both counts equal [p | nu(beta)] and p^2 never divides.
DivisibilitySweep divisibility_sweep(std::int64_t p, std::int64_t norm_bound, std::size_t max_witnesses = 5);

}  // namespace qll
