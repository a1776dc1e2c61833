#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qll/lift/hecke_action.hpp"

namespace qll {

struct EquivarianceViolation {
  HurwitzQuaternion beta;
  SymbolicValue difference;
};

struct EquivarianceReport {
  HeckeOperatorId op;
  SymbolicValue eigenvalue;
  std::int64_t norm_bound = 0;
  std::size_t checked = 0;
  /// Distinct (weights, key) classes actually evaluated symbolically.
  std::size_t distinct_classes = 0;
  std::size_t violation_count = 0;
  /// First violations in enumeration order (at most `max_witnesses`).
  std::vector<EquivarianceViolation> witnesses;
  bool passed() const { return violation_count == 0; }
};

/**
 * Checks hecke_apply(op, beta) = mu A(beta) exactly for every nonzero beta in S
 * with nu(beta) <= norm_bound, mu the eigenvalue of the operator. The source
 * must build in the recursion at op.p (ConfigError otherwise).
 */
EquivarianceReport verify_equivariance(const HeckeOperatorId& op, const CoefficientSource& source,
                                       std::int64_t norm_bound, std::size_t max_witnesses = 5);

/// All nonzero beta in S with nu(beta) <= norm_bound, ordered by norm then coordinates.
std::vector<HurwitzQuaternion> s_ball(std::int64_t norm_bound);

}  // namespace qll
