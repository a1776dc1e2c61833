#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qll/number/rational.hpp"

namespace qll {

/**
 * Exact element of a real multi-quadratic field Q(sqrt(r1), ..., sqrt(rk)).
 *
 * Stored as a sum of q_r * sqrt(r) over squarefree radicands r, sorted by r,
 * with no zero coefficients. Radicand 1 carries the rational part. The normal
 * form is unique, so equality is structural.
 */
class AlgebraicReal {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  AlgebraicReal() = default;
  AlgebraicReal(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicReal(long q) : AlgebraicReal(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// s * sqrt(r) with n = s^2 r, r squarefree. n = 0 is rejected.
  static AlgebraicReal sqrt_of(std::uint64_t n);
  /// sqrt(q) for a non-negative rational q, expressed as sqrt_of(num * den) / den.
  static AlgebraicReal sqrt_of(const Rational& q);
  /// coeff * sqrt(radicand); radicand must be squarefree.
  static AlgebraicReal radical(std::uint64_t radicand, const Rational& coeff = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const;
  /// Coefficient of sqrt(radicand) (zero when absent).
  Rational coefficient(std::uint64_t radicand) const;

  AlgebraicReal& operator+=(const AlgebraicReal& other);
  AlgebraicReal& operator-=(const AlgebraicReal& other);
  AlgebraicReal& operator*=(const AlgebraicReal& other);
  AlgebraicReal& operator*=(const Rational& q);

  friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
  friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }
  AlgebraicReal operator-() const;

  /// Throws std::domain_error on zero.
  AlgebraicReal inverse() const;

  /// Galois conjugate flipping the sign of sqrt(prime).
  AlgebraicReal conjugate_at(std::uint64_t prime) const;

  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraicReal&, const AlgebraicReal&) = default;

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline bool is_zero(const AlgebraicReal& a) { return a.is_zero(); }

AlgebraicReal pow(const AlgebraicReal& a, unsigned exponent);

}  // namespace qll
