#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qll {

/// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_string(const Rational& q);

/// Accepts "n", "n/d" or a terminating decimal "n.f", with optional sign;
/// throws std::invalid_argument on junk or d = 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational inverse(const Rational& q);

Rational pow(const Rational& q, int exponent);

double to_double(const Rational& q);

}  // namespace qll
