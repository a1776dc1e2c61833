#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qll/number/algebraic_real.hpp"
#include "qll/number/rational.hpp"

namespace qll {

/// Indeterminates used by the symbolic layer: eps (eps^2 = 1), lambda_p, and
/// free Fourier coefficients c_m.
struct Indeterminate {
  enum class Kind : std::uint8_t { epsilon, lambda, coeff };
  Kind kind = Kind::epsilon;
  std::uint64_t index = 0;

  static Indeterminate epsilon() { return {Kind::epsilon, 0}; }
  static Indeterminate lambda(std::uint64_t p) { return {Kind::lambda, p}; }
  static Indeterminate coeff(std::uint64_t m) { return {Kind::coeff, m}; }

  std::string name() const;
  /// Inverse of name(): "eps", "lambda_<p>", "c_<m>".
  static Indeterminate parse(const std::string& text);

  friend auto operator<=>(const Indeterminate&, const Indeterminate&) = default;
};

namespace detail {
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

/// Sorted (indeterminate, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<Indeterminate, unsigned>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m);

/**
 * Sparse polynomial in the indeterminates above with coefficients in C.
 * The exponent of eps is reduced mod 2 on every product.
 */
template <class C>
class Polynomial {
 public:
  using Terms = std::map<Monomial, C>;

  Polynomial() = default;
  Polynomial(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Polynomial(long c) : Polynomial(C(Rational(c))) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Indeterminate x) {
    Polynomial out;
    out.terms_.emplace(Monomial{{x, 1u}}, C(Rational(1)));
    return out;
  }
  static Polynomial term(Monomial m, C c) {
    Polynomial out;
    if (!detail::coeff_is_zero(c)) out.terms_.emplace(std::move(m), std::move(c));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C() : it->second;
  }
  std::size_t size() const { return terms_.size(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c = c * s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  /// Adds c * m.
  void add_term(const Monomial& m, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

  /// Indeterminates occurring with nonzero exponent.
  std::vector<Indeterminate> indeterminates() const {
    std::vector<Indeterminate> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [x, e] : m) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Replaces the bound indeterminates; unbound ones are kept.
  Polynomial substitute_partial(const std::map<Indeterminate, C>& bindings) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial rest;
      C coeff = c;
      for (const auto& [x, e] : m) {
        auto it = bindings.find(x);
        if (it == bindings.end()) {
          rest.emplace_back(x, e);
          continue;
        }
        for (unsigned k = 0; k < e; ++k) coeff = coeff * it->second;
      }
      out.add_term(rest, coeff);
    }
    return out;
  }

  /// Full evaluation; throws std::invalid_argument naming the first unbound indeterminate.
  C substitute(const std::map<Indeterminate, C>& bindings) const {
    for (const auto& x : indeterminates())
      if (!bindings.count(x)) throw std::invalid_argument("unbound indeterminate " + x.name());
    return substitute_partial(bindings).constant_term();
  }

  /// Applies f to every coefficient (ring change).
  template <class D, class F>
  Polynomial<D> map_coefficients(F&& f) const {
    Polynomial<D> out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using SymbolicValue = Polynomial<AlgebraicReal>;

/// Symbolic ε, λ_p, c_m as SymbolicValue.
inline SymbolicValue sym_epsilon() { return SymbolicValue::variable(Indeterminate::epsilon()); }
inline SymbolicValue sym_lambda(std::uint64_t p) { return SymbolicValue::variable(Indeterminate::lambda(p)); }
inline SymbolicValue sym_coeff(std::uint64_t m) { return SymbolicValue::variable(Indeterminate::coeff(m)); }

std::string to_string(const SymbolicValue& v);

/// eps must be bound to +1 or -1 when present.
AlgebraicReal substitute(const SymbolicValue& expr, const std::map<Indeterminate, AlgebraicReal>& bindings);

}  // namespace qll
