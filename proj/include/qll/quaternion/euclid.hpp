#pragma once

#include <utility>

#include "qll/quaternion/hurwitz.hpp"

namespace qll {

struct DivisionResult {
  HurwitzQuaternion quotient;
  HurwitzQuaternion remainder;
};

/**
 * Right division in O: a = q * b + r with nu(r) < nu(b).
 *
 * q is the Hurwitz integer nearest to a * b^-1 among the integer and
 * half-integer roundings of each coordinate, ties broken by doubled
 * coordinates. Throws std::invalid_argument if b = 0 or a, b are not in O.
 */
DivisionResult euclid_div(const HurwitzQuaternion& a, const HurwitzQuaternion& b);

}  // namespace qll
