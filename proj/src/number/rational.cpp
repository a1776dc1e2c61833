#include "qll/number/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qll {

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    // Terminating decimal: digits after the point scale by a power of ten.
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
    std::string whole(text.substr(0, dot));
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer magnitude = abs(parse_integer(whole)) * scale + Integer(std::string(frac));
    return make_rational(negative ? Integer(-magnitude) : magnitude, scale);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Rational inverse(const Rational& q) {
  if (is_zero(q)) throw std::domain_error("division by zero");
  return Rational(1) / q;
}

Rational pow(const Rational& q, int exponent) {
  if (exponent < 0) return pow(inverse(q), -exponent);
  Rational out(1);
  Rational base = q;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) out *= base;
    base *= base;
  }
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace qll
