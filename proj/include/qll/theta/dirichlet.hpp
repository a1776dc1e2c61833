#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qll/lift/coefficient_source.hpp"
#include "qll/number/cyclotomic.hpp"
#include "qll/theta/harmonic.hpp"

namespace qll {

/// Coefficient of n^{-s}; zero entries are absent.
using DirichletCoefficients = std::map<std::int64_t, CyclotomicPolynomial>;

/**
 * sum_{beta in S, beta != 0} A(beta) P(beta) (|beta|^2)^{-(s + (l+1)/2)} up to
 * index N. Each shell is grouped by lift key and summed through moment tables.
 * The source must take values in Q(sqrt2)[indeterminates] (ConfigError otherwise).
 */
DirichletCoefficients dirichlet_lhs(const HarmonicPolynomial& p, const CoefficientSource& source, std::int64_t n_max);

/**
 * 2^{1-l/2} 2^{-2s-1} (2^{2s} - 1) (2^s + a)^{-1} zeta(2s) sum_m c(-m) b(2m) m^{-s-l/2},
 * a = eps_{l,nu} eps, expanded formally and truncated at index N.
 * Requires eps_{l,nu} = +-1.
 */
DirichletCoefficients dirichlet_rhs(const HarmonicPolynomial& p, const CoefficientSource& source, std::int64_t n_max);

struct DirichletMismatch {
  std::int64_t n = 0;
  CyclotomicPolynomial lhs;
  CyclotomicPolynomial rhs;
};

struct DirichletReport {
  unsigned l = 0;
  std::size_t nu = 0;
  int eigen_index = 0;
  /// "identity" when eps_{l,nu} = +-1, otherwise "vanishing" (every LHS coefficient must be zero).
  std::string branch;
  std::int64_t n_max = 0;
  std::size_t nonzero_indices = 0;
  std::size_t mismatch_count = 0;
  /// First few mismatching indices.
  std::vector<DirichletMismatch> mismatches;
  bool passed() const { return mismatch_count == 0; }
};

DirichletReport dirichlet_identity_check(const HarmonicPolynomial& p, const CoefficientSource& source,
                                         std::int64_t n_max, std::size_t max_witnesses = 5);

}  // namespace qll
