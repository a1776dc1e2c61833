#include "qll/number/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qll {

CyclotomicValue CyclotomicValue::zeta_power(long k) {
  long r = ((k % 8) + 8) % 8;
  CyclotomicValue out;
  out.c_[r % 4] = r < 4 ? 1 : -1;
  return out;
}

CyclotomicValue CyclotomicValue::sqrt2() { return zeta_power(1) - zeta_power(3); }

CyclotomicValue CyclotomicValue::from_algebraic(const AlgebraicReal& a) {
  CyclotomicValue out;
  for (const auto& [r, q] : a.terms()) {
    if (r == 1)
      out += CyclotomicValue(q);
    else if (r == 2)
      out += sqrt2() * CyclotomicValue(q);
    else
      throw std::domain_error("radicand " + std::to_string(r) + " does not embed in Q(zeta_8)");
  }
  return out;
}

bool CyclotomicValue::is_zero() const {
  for (const auto& q : c_)
    if (!qll::is_zero(q)) return false;
  return true;
}

bool CyclotomicValue::is_rational() const {
  return qll::is_zero(c_[1]) && qll::is_zero(c_[2]) && qll::is_zero(c_[3]);
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  std::array<Rational, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (qll::is_zero(a.c_[i])) continue;
    for (int j = 0; j < 4; ++j) {
      if (qll::is_zero(b.c_[j])) continue;
      const int k = i + j;
      if (k < 4)
        out[k] += a.c_[i] * b.c_[j];
      else
        out[k - 4] -= a.c_[i] * b.c_[j];
    }
  }
  return CyclotomicValue(out);
}

CyclotomicValue CyclotomicValue::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("galois: exponent must be odd");
  CyclotomicValue out;
  for (int i = 0; i < 4; ++i)
    if (!qll::is_zero(c_[i])) out += zeta_power(static_cast<long>(i) * k) * CyclotomicValue(c_[i]);
  return out;
}

CyclotomicValue CyclotomicValue::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicValue: division by zero");
  const CyclotomicValue others = galois(3) * galois(5) * galois(7);
  const CyclotomicValue norm = *this * others;
  if (!norm.is_rational()) throw std::logic_error("CyclotomicValue::inverse: norm not rational");
  return others * CyclotomicValue(qll::inverse(norm.c_[0]));
}

std::complex<double> CyclotomicValue::to_complex() const {
  std::complex<double> out = 0;
  for (int i = 0; i < 4; ++i) out += c_[i].get_d() * std::polar(1.0, i * std::numbers::pi / 4);
  return out;
}

std::string CyclotomicValue::to_string() const {
  static const char* names[] = {"", "z", "z^2", "z^3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (qll::is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += c_[i].get_str();
    else if (c_[i] == 1)
      out += names[i];
    else
      out += "(" + c_[i].get_str() + ")*" + names[i];
  }
  return out.empty() ? "0" : out;
}

CyclotomicValue pow(const CyclotomicValue& v, long exponent) {
  if (exponent < 0) return pow(v.inverse(), -exponent);
  CyclotomicValue out(1);
  CyclotomicValue base = v;
  for (unsigned long e = static_cast<unsigned long>(exponent); e; e >>= 1) {
    if (e & 1u) out *= base;
    if (e > 1) base *= base;
  }
  return out;
}

int root_of_unity_index(const CyclotomicValue& v) {
  for (int k = 0; k < 8; ++k)
    if (v == CyclotomicValue::zeta_power(k)) return k;
  return -1;
}

CyclotomicPolynomial to_cyclotomic(const SymbolicValue& v) {
  return v.map_coefficients<CyclotomicValue>([](const AlgebraicReal& a) { return CyclotomicValue::from_algebraic(a); });
}

std::string to_string(const CyclotomicPolynomial& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool compound = cs.find(' ') != std::string::npos || cs.find('*') != std::string::npos;
    if (m.empty()) {
      out += compound ? "(" + cs + ")" : cs;
    } else {
      if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
      out += monomial_to_string(m);
    }
  }
  return out;
}

}  // namespace qll
