#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>

#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/coefficient_source.hpp"
#include "qll/number/polynomial.hpp"

namespace qll {

/// (nu(beta), u, d) of the primitive decomposition; A(beta) depends on nothing else.
struct LiftKey {
  std::int64_t nu = 0;
  unsigned u = 0;
  std::int64_t d = 1;
  friend auto operator<=>(const LiftKey&, const LiftKey&) = default;
};

/// Key of x, or nullopt when x is zero or lies outside S.
std::optional<LiftKey> lift_key(const HurwitzQuaternion& x);

/**
 * A(beta) = |beta| sum_{t=0..u} sum_{n | d} (-eps)^t c(-|beta|^2 / (2^{t+1} n^2))
 * over a coefficient source, with A(x) = 0 for x outside S. Values are cached
 * per key; safe for concurrent use.
 */
class LiftEvaluator {
 public:
  explicit LiftEvaluator(const CoefficientSource& source) : source_(source) {}

  const CoefficientSource& source() const { return source_; }

  SymbolicValue exact(const HurwitzQuaternion& x) const;
  SymbolicValue exact(const LiftKey& key) const;
  double numeric(const HurwitzQuaternion& x) const;
  double numeric(const LiftKey& key) const;

 private:
  const CoefficientSource& source_;
  mutable std::shared_mutex mutex_;
  mutable std::map<LiftKey, SymbolicValue> exact_cache_;
  mutable std::map<LiftKey, double> numeric_cache_;
};

/// One-shot A(beta); throws std::invalid_argument when beta is zero or outside S.
SymbolicValue lift_coeff(const CoefficientSource& source, const HurwitzQuaternion& beta);

}  // namespace qll
