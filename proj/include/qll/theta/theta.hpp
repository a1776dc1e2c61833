#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qll/theta/harmonic.hpp"

namespace qll {

/// b(2m) = sum_{beta in S, |beta|^2 = 2m} P(beta) for m = 0..max_m (index m).
std::vector<CyclotomicValue> theta_coeffs(const HarmonicPolynomial& p, std::int64_t max_m);

struct OSIdentityResult {
  bool holds = true;
  /// First m where the two sides differ (when !holds).
  std::int64_t first_mismatch = -1;
};

/// sum_{gamma in O, nu(gamma) = m} P(gamma) = eps^-1 2^{-l/2} b(2m) for 0 <= m <= max_m.
OSIdentityResult verify_o_s_identity(const HarmonicPolynomial& p, std::int64_t max_m);

struct ThetaValue {
  std::complex<double> value;
  /// Bound on |sum_{m > M} b(2m) q^m|.
  double tail_bound = 0.0;
};

/// Truncated Theta(z) = sum_{m <= M} b(2m) e^{2 pi i m z}; throws std::invalid_argument if Im z <= 0.
ThetaValue theta_eval(const HarmonicPolynomial& p, std::complex<double> z, std::int64_t max_m);
/// Same, reusing precomputed coefficients.
ThetaValue theta_eval(const HarmonicPolynomial& p, const std::vector<CyclotomicValue>& coeffs, std::complex<double> z);

/// Bound on the truncation tail at height y, from point counts and the coefficient bound of P.
double theta_tail_bound(const HarmonicPolynomial& p, std::int64_t max_m, double y);
/// Smallest M with theta_tail_bound(p, M, y) < target (capped at `cap`; returns cap when unreachable).
std::int64_t theta_truncation_for(const HarmonicPolynomial& p, double y, double target, std::int64_t cap = 2000);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct TransformationCheck {
  std::string name;
  double error = 0.0;
  double tail = 0.0;
  Verdict verdict = Verdict::pass;
};

struct TransformationReport {
  std::int64_t truncation = 0;
  std::vector<TransformationCheck> checks;
  Verdict verdict() const;
};

/**
 * Numeric check of Theta(-1/(2z)) = sign * eps^-1 2^{l/2+1} z^{l+2} Theta(z)
 * (sign = -1 is the true law; +1 serves as a control), plus weight l+2
 * invariance under [[1,1],[0,1]] and [[1,0],[2,1]]. A check whose truncation
 * bound exceeds tol is inconclusive. max_m = 0 grows the truncation until
 * every check's tail bound is below tol / 10.
 */
TransformationReport verify_transformation(const HarmonicPolynomial& p, std::complex<double> z, double tol,
                                           std::int64_t max_m = 0, int sign = -1);

}  // namespace qll
