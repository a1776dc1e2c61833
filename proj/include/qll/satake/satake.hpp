#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qll/number/algebraic_real.hpp"
#include "qll/number/polynomial.hpp"

namespace qll {

enum class Temperedness { tempered, non_tempered, undetermined };
std::string to_string(Temperedness t);

struct SatakeParams {
  /// Prime p, or 0 for the archimedean place.
  std::uint64_t p = 0;
  /// Numeric values; empty in symbolic-only mode.
  std::vector<std::complex<double>> values;
  /// Exact values when they lie in the radical tower (p = 2).
  std::vector<AlgebraicReal> exact;
  /// Formal description of the values in symbolic mode.
  std::vector<std::string> symbolic;
  Temperedness tempered = Temperedness::undetermined;
  /// Why the verdict is what it is (used for undetermined and archimedean records).
  std::string note;
  /// Spectral parameter for the archimedean record.
  std::optional<double> r;
};

/**
 * {p^{1/2} eta, p^{1/2} eta^-1, p^{-1/2} eta, p^{-1/2} eta^-1} with
 * eta = (lambda + sqrt(lambda^2 - 4)) / 2; complex when |lambda| < 2.
 * Throws std::invalid_argument unless p is an odd prime.
 */
SatakeParams satake_odd(std::uint64_t p, double lambda);
/// Same values kept formal in lambda_p; temperedness undetermined.
SatakeParams satake_odd_symbolic(std::uint64_t p);

/// {-sqrt2 eps, -eps / sqrt2}, exact. Throws unless eps = +-1.
SatakeParams satake_two(int eps);

/// Metadata record: unitary spherical principal series with parameter r, tempered.
SatakeParams satake_infinity(std::optional<double> r);

/// Tempered iff every value has modulus 1 within tol; undetermined without numeric values.
Temperedness classify_temperedness(const SatakeParams& params, double tol = 1e-9);

/// Elementary symmetric polynomials e1..e4 of the odd-p values, as polynomials in lambda_p.
std::vector<SymbolicValue> satake_symmetric_functions(std::uint64_t p);

struct SatakeIdentity {
  std::string name;
  SymbolicValue lhs;
  SymbolicValue rhs;
  bool holds() const { return lhs == rhs; }
};

struct SatakeOddReport {
  std::uint64_t p = 0;
  std::vector<SymbolicValue> symmetric;
  std::vector<SatakeIdentity> identities;
  bool passed() const;
};

/// p^{3/2} e1 = p^{3/2} e3 = p(p+1) lambda, p^2 e2 = p^2 lambda^2 + p^3 + p, e4 = 1.
SatakeOddReport verify_hecke_satake_odd(std::uint64_t p);

struct SatakeTwoReport {
  int eps = 1;
  SatakeParams params;
  AlgebraicReal product;
  AlgebraicReal hecke_value;  // 2 (alpha1 + alpha2)
  AlgebraicReal expected;     // -3 sqrt2 eps
  bool passed() const { return product == AlgebraicReal(1) && hecke_value == expected; }
};

SatakeTwoReport verify_satake_two(int eps);

/// Multiset equality up to tol (order-insensitive).
bool multisets_match(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                     double tol = 1e-9);

struct CapMatchResult {
  std::uint64_t p = 0;
  double lambda = 0.0;
  std::complex<double> eta0;
  /// {p^{1/2} eta0, p^{1/2} eta0^-1, p^{-1/2} eta0, p^{-1/2} eta0^-1}.
  std::vector<std::complex<double>> induced;
  std::vector<std::complex<double>> satake;
  bool match = false;
};

/// eta0 from eta0 + eta0^-1 = lambda, induced multiset compared with satake_odd(p, lambda).
CapMatchResult cap_match(std::uint64_t p, double lambda, double tol = 1e-9);

/// (-eps)^n (2^{3n/2} + 2^{n/2}). Throws unless eps = +-1.
AlgebraicReal two_power_eigenvalue(unsigned n, int eps);

}  // namespace qll
