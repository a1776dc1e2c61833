#pragma once

#include <array>
#include <complex>
#include <string>

#include "qll/number/algebraic_real.hpp"
#include "qll/number/polynomial.hpp"
#include "qll/number/rational.hpp"

namespace qll {

/// Element of Q(zeta) with zeta = exp(i*pi/4), on the basis 1, zeta, zeta^2, zeta^3.
class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  CyclotomicValue(const Rational& q) : c_{q, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CyclotomicValue(long q) : CyclotomicValue(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  explicit CyclotomicValue(std::array<Rational, 4> c) : c_(std::move(c)) {}

  /// zeta^k for any integer k.
  static CyclotomicValue zeta_power(long k);
  static CyclotomicValue sqrt2();
  static CyclotomicValue imag_unit() { return zeta_power(2); }
  /// Embeds an element whose radicands lie in {1, 2}; throws std::domain_error otherwise.
  static CyclotomicValue from_algebraic(const AlgebraicReal& a);

  const std::array<Rational, 4>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const CyclotomicValue& o) { return *this = *this * o; }
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator/(const CyclotomicValue& a, const CyclotomicValue& b) { return a * b.inverse(); }
  CyclotomicValue operator-() const;

  /// Automorphism zeta -> zeta^k, k odd.
  CyclotomicValue galois(int k) const;
  /// Complex conjugation (zeta -> zeta^7).
  CyclotomicValue conj() const { return galois(7); }
  /// Throws std::domain_error on zero.
  CyclotomicValue inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const CyclotomicValue& v) { return v.is_zero(); }

CyclotomicValue pow(const CyclotomicValue& v, long exponent);

/// Smallest k in [0, 8) with v = zeta^k, or -1 if v is not an 8th root of unity.
int root_of_unity_index(const CyclotomicValue& v);

using CyclotomicPolynomial = Polynomial<CyclotomicValue>;

CyclotomicPolynomial to_cyclotomic(const SymbolicValue& v);
std::string to_string(const CyclotomicPolynomial& v);

}  // namespace qll
