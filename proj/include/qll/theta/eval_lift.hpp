#pragma once

#include <array>
#include <cstdint>

#include "qll/lift/coefficient_source.hpp"

namespace qll {

struct LiftValue {
  double value = 0.0;
  /// Bound on the contribution of nu(beta) > norm_bound.
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/**
 * F(x, y) = sum_{beta in S, 0 < nu(beta) <= norm_bound} A(beta) y^2 K_{ir}(2 pi |beta| y) cos(2 pi Re(beta x)),
 * x = x0 + x1 i + x2 j + x3 k. Uses numeric coefficients of the source.
 * Throws ConfigError if the source has no spectral parameter; std::invalid_argument if y <= 0.
 */
LiftValue eval_lift(const CoefficientSource& source, const std::array<double, 4>& x, double y, std::int64_t norm_bound);

}  // namespace qll
