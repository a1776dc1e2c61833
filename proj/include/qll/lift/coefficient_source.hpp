#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>

#include "qll/number/polynomial.hpp"

namespace qll {

/**
 * Provider of the Maass-form coefficients c(-m), m >= 1, together with the
 * Atkin-Lehner sign eps. All accessors are safe for concurrent use.
 */
class CoefficientSource {
 public:
  virtual ~CoefficientSource() = default;

  /// Exact c(-m); throws if the source only holds floating values.
  virtual SymbolicValue exact(std::uint64_t m) const = 0;
  /// Numeric c(-m); throws if the exact value still contains indeterminates.
  virtual double numeric(std::uint64_t m) const;
  /// eps as a SymbolicValue: the indeterminate eps or the constant +-1.
  virtual SymbolicValue epsilon() const = 0;
  /// Numeric eps when fixed.
  virtual std::optional<int> epsilon_sign() const = 0;
  virtual std::optional<double> spectral_parameter() const { return std::nullopt; }
  /// Whether the Hecke recursion at p is built into the source.
  virtual bool satisfies_recursion(std::uint64_t p) const = 0;
};

struct HeckeSourceConfig {
  /// Primes along which values are generated by recursion.
  std::set<std::uint64_t> active_primes;
  /// nullopt keeps eps symbolic.
  std::optional<int> epsilon;
  /// Fixed values of lambda_p for odd active p; unbound ones stay symbolic.
  std::map<std::uint64_t, AlgebraicReal> lambdas;
  /// Fixed seeds c(-m) at indices coprime to the active primes.
  std::map<std::uint64_t, SymbolicValue> seeds;
  /// When false, a seed index missing from `seeds` is an error; otherwise it becomes the symbol c_m.
  bool free_seeds = true;
  /// Values forced at an index after all rules (used to break a relation on purpose).
  std::map<std::uint64_t, SymbolicValue> overrides;
};

/**
 * Coefficients generated from seeds by
 *   c(2m) = -(eps / 2) c(m)                         (2 active)
 *   c(pn) = p^{-1/2} lambda_p c(n) - p^{-1} c(n/p)  (odd p active; c(n/p) = 0 if p does not divide n).
 * Results are memoized.
 */
class HeckeGeneratedSource : public CoefficientSource {
 public:
  explicit HeckeGeneratedSource(HeckeSourceConfig config);

  SymbolicValue exact(std::uint64_t m) const override;
  SymbolicValue epsilon() const override;
  std::optional<int> epsilon_sign() const override { return config_.epsilon; }
  bool satisfies_recursion(std::uint64_t p) const override;

  const HeckeSourceConfig& config() const { return config_; }
  /// lambda_p as bound or symbolic.
  SymbolicValue lambda(std::uint64_t p) const;

 private:
  SymbolicValue compute(std::uint64_t m) const;

  HeckeSourceConfig config_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::uint64_t, SymbolicValue> memo_;
};

struct FileCoefficient {
  double approx = 0.0;
  std::optional<Rational> exact;
};

/// Coefficients read from a table; indices absent from the table read as zero.
class FileBackedSource : public CoefficientSource {
 public:
  FileBackedSource(double r, int atkin_lehner, std::map<std::int64_t, FileCoefficient> table);

  SymbolicValue exact(std::uint64_t m) const override;
  double numeric(std::uint64_t m) const override;
  SymbolicValue epsilon() const override { return SymbolicValue(static_cast<long>(atkin_lehner_)); }
  std::optional<int> epsilon_sign() const override { return atkin_lehner_; }
  std::optional<double> spectral_parameter() const override { return r_; }
  bool satisfies_recursion(std::uint64_t) const override { return false; }

  double r() const { return r_; }
  int atkin_lehner() const { return atkin_lehner_; }
  /// Keyed by the signed index n of c(n).
  const std::map<std::int64_t, FileCoefficient>& table() const { return table_; }

 private:
  double r_;
  int atkin_lehner_;
  std::map<std::int64_t, FileCoefficient> table_;
};

}  // namespace qll
