#include "qll/number/algebraic_real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qll/number/arith.hpp"

namespace qll {

AlgebraicReal::AlgebraicReal(const Rational& q) {
  if (!qll::is_zero(q)) terms_.emplace_back(1, q);
}

AlgebraicReal AlgebraicReal::sqrt_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sqrt_of: argument must be positive");
  const auto [root, rad] = squarefree_split(n);
  return radical(rad, Rational(static_cast<unsigned long>(root)));
}

AlgebraicReal AlgebraicReal::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) throw std::invalid_argument("sqrt_of: negative rational");
  if (sgn(q) == 0) return {};
  const Integer prod = q.get_num() * q.get_den();
  if (!prod.fits_ulong_p()) throw std::overflow_error("sqrt_of: radicand too large");
  AlgebraicReal out = sqrt_of(prod.get_ui());
  out *= Rational(Integer(1), q.get_den());
  return out;
}

AlgebraicReal AlgebraicReal::radical(std::uint64_t radicand, const Rational& coeff) {
  if (!is_squarefree(radicand)) throw std::invalid_argument("radical: radicand must be squarefree");
  AlgebraicReal out;
  if (!qll::is_zero(coeff)) out.terms_.emplace_back(radicand, coeff);
  return out;
}

Rational AlgebraicReal::rational_part() const { return coefficient(1); }

Rational AlgebraicReal::coefficient(std::uint64_t radicand) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::uint64_t r) { return t.first < r; });
  if (it != terms_.end() && it->first == radicand) return it->second;
  return Rational(0);
}

void AlgebraicReal::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return qll::is_zero(t.second); });
  terms_ = std::move(merged);
}

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (!qll::is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& other) { return *this += -other; }

AlgebraicReal AlgebraicReal::operator-() const {
  AlgebraicReal out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

AlgebraicReal& AlgebraicReal::operator*=(const Rational& q) {
  if (qll::is_zero(q)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= q;
  return *this;
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& other) {
  *this = *this * other;
  return *this;
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [r, q] : a.terms_) {
    for (const auto& [s, w] : b.terms_) {
      // sqrt(r) sqrt(s) = g sqrt(rs / g^2), g = gcd(r, s)
      const std::uint64_t g = std::gcd(r, s);
      Rational c = q * w;
      c *= static_cast<unsigned long>(g);
      out.terms_.emplace_back((r / g) * (s / g), std::move(c));
    }
  }
  out.normalize();
  return out;
}

AlgebraicReal AlgebraicReal::conjugate_at(std::uint64_t prime) const {
  AlgebraicReal out = *this;
  for (auto& [r, q] : out.terms_)
    if (r % prime == 0) q = -q;
  return out;
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (is_zero()) throw std::domain_error("AlgebraicReal: division by zero");
  std::set<std::uint64_t> primes;
  for (const auto& [r, q] : terms_)
    if (r > 1)
      for (auto [p, e] : factorize(r)) primes.insert(p);
  // Multiplying by the conjugate at each prime in turn clears that prime from
  // every radicand; what is left is a nonzero rational.
  AlgebraicReal numerator(Rational(1));
  AlgebraicReal current = *this;
  for (auto p : primes) {
    const AlgebraicReal c = current.conjugate_at(p);
    numerator *= c;
    current *= c;
  }
  if (!current.is_rational() || current.is_zero())
    throw std::logic_error("AlgebraicReal::inverse: norm did not reduce to a rational");
  numerator *= qll::inverse(current.rational_part());
  return numerator;
}

double AlgebraicReal::to_double() const {
  long double s = 0;
  for (const auto& [r, q] : terms_) s += static_cast<long double>(q.get_d()) * std::sqrt(static_cast<long double>(r));
  return static_cast<double>(s);
}

std::string AlgebraicReal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, q] : terms_) {
    std::string coeff = q.get_str();
    if (!out.empty()) out += sgn(q) < 0 ? " - " : " + ";
    else if (sgn(q) < 0) out += "-";
    Rational mag = abs(q);
    if (r == 1) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + std::to_string(r) + ")";
    }
  }
  return out;
}

AlgebraicReal pow(const AlgebraicReal& a, unsigned exponent) {
  AlgebraicReal out(Rational(1));
  AlgebraicReal base = a;
  for (unsigned e = exponent; e; e >>= 1) {
    if (e & 1u) out *= base;
    if (e > 1) base *= base;
  }
  return out;
}

}  // namespace qll
