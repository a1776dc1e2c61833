#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qll/number/linalg.hpp"
#include "qll/quaternion/hurwitz.hpp"

namespace qll {

using LatticeBasis = std::array<HurwitzQuaternion, 4>;

/// {1 - ij, -i - ij, -j - ij, 2ij}.
const LatticeBasis& s_basis();
/// {1, i, j, (1 + i + j + k)/2}.
const LatticeBasis& o_basis();

/// Row HNF of the doubled-coordinate matrix of the basis.
Matrix<Integer> basis_hnf(const LatticeBasis& basis);
/// Absolute determinant of the doubled-coordinate matrix.
Integer basis_determinant(const LatticeBasis& basis);
bool same_lattice(const LatticeBasis& x, const LatticeBasis& y);

/// Basis {varpi * o} (left) or {o * varpi} (right) for o in the O basis.
LatticeBasis varpi_times_o_basis(bool varpi_on_left = true);

/// beta in S, decided by solving the integer system against s_basis().
bool s_membership(const HurwitzQuaternion& beta);
/// Coordinates of beta in the given basis (rational; integral iff beta is in the lattice).
std::array<Rational, 4> lattice_coordinates(const LatticeBasis& basis, const HurwitzQuaternion& beta);

/// The S = varpi O comparison via Hermite normal forms.
bool verify_s_equals_w2O();

/// varpi^-1 * x (left) when it lies in O.
std::optional<HurwitzQuaternion> divide_by_varpi_left(const HurwitzQuaternion& x);
/// x * varpi^-1 (right) when it lies in O.
std::optional<HurwitzQuaternion> divide_by_varpi_right(const HurwitzQuaternion& x);
/// Largest m with varpi^-m x in O (x in O, nonzero).
unsigned varpi_valuation(const HurwitzQuaternion& x);

/// All beta in S with nu(beta) = n, sorted by doubled coordinates. Cached.
const std::vector<HurwitzQuaternion>& enumerate_by_norm(std::int64_t n);
/// All gamma in O with nu(gamma) = m, sorted. Cached.
const std::vector<HurwitzQuaternion>& enumerate_o_by_norm(std::int64_t m);
/// The same S-sphere obtained as varpi * {gamma in O : nu(gamma) = n/2}, sorted.
std::vector<HurwitzQuaternion> enumerate_by_norm_via_varpi(std::int64_t n);

struct PrimitiveDecomposition {
  unsigned u = 0;
  std::int64_t d = 1;
  HurwitzQuaternion beta0;
};

/// beta = varpi^u * d * beta0 with beta0 primitive. Throws std::invalid_argument
/// if beta is zero or not in S.
PrimitiveDecomposition primitive_decompose(const HurwitzQuaternion& beta);

/// varpi divides, varpi^2 does not, and no odd integer > 1 divides.
bool is_primitive(const HurwitzQuaternion& beta);

/// Re(beta x) integral on basis pairs, and every non-S sample point with
/// doubled coordinates in [-bound, bound] is detected by some O basis element.
bool dual_pairing_check(std::int64_t sample_bound);

}  // namespace qll
