#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qll/number/cyclotomic.hpp"
#include "qll/quaternion/hurwitz.hpp"

namespace qll {

using Exponents = std::array<unsigned, 4>;

/// Homogeneous polynomial in x1..x4 (x = x1 + x2 i + x3 j + x4 k) over Q(zeta_8).
using Poly4 = std::map<Exponents, CyclotomicValue>;

/**
 * Degree-l harmonic polynomial with P(L x) = eps * P(x), L the left
 * multiplication by (1 + i)/sqrt(2).
 */
struct HarmonicPolynomial {
  unsigned l = 0;
  /// Position in harmonic_basis(l).
  std::size_t nu = 0;
  Poly4 coeffs;
  CyclotomicValue eigenvalue;
  /// k with eigenvalue = zeta_8^k.
  int eigen_index = 0;

  CyclotomicValue eval(const HurwitzQuaternion& x) const;
  /// sum over monomials of |coefficient| (complex modulus); |P(x)| <= this * |x|^l.
  double coefficient_bound() const;
  std::string to_string() const;
};

/// All exponent vectors of total degree l, in a fixed order.
std::vector<Exponents> monomials(unsigned l);

Poly4 laplacian(const Poly4& p);
/// x -> P(L x).
Poly4 substitute_left_varpi(const Poly4& p, unsigned l);

/// Eigenbasis of the harmonic space of degree l (even, l <= 8); cached.
/// Throws std::invalid_argument for odd or too large l.
const std::vector<HarmonicPolynomial>& harmonic_basis(unsigned l);

constexpr unsigned kMaxHarmonicDegree = 8;

/// Power sums sum_x x^e over a point set, in doubled coordinates; exact.
using MomentTable = std::map<Exponents, Integer>;
void accumulate_moments(MomentTable& table, const std::vector<Exponents>& mons, const HurwitzQuaternion& x);
/// sum_x P(x) from the doubled-coordinate moments of the point set.
CyclotomicValue eval_from_moments(const HarmonicPolynomial& p, const MomentTable& table);

}  // namespace qll
