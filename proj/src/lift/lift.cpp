#include "qll/lift/lift.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "qll/number/arith.hpp"

namespace qll {

namespace {

// Index |beta|^2 / (2^{t+1} n^2), asserted integral.
std::uint64_t coefficient_index(const LiftKey& key, unsigned t, std::uint64_t n) {
  const std::uint64_t den = (std::uint64_t{2} << t) * n * n;
  const auto nu = static_cast<std::uint64_t>(key.nu);
  if (nu % den != 0) throw std::logic_error("lift: non-integral coefficient index");
  return nu / den;
}

}  // namespace

std::optional<LiftKey> lift_key(const HurwitzQuaternion& x) {
  if (x.is_zero() || !x.in_order()) return std::nullopt;
  const auto nu = x.norm_int();
  if (nu % 2 != 0) return std::nullopt;
  const auto dec = primitive_decompose(x);
  return LiftKey{nu, dec.u, dec.d};
}

SymbolicValue LiftEvaluator::exact(const LiftKey& key) const {
  {
    std::shared_lock lock(mutex_);
    auto it = exact_cache_.find(key);
    if (it != exact_cache_.end()) return it->second;
  }
  const SymbolicValue minus_eps = -source_.epsilon();
  SymbolicValue sign(1L);
  SymbolicValue sum;
  for (unsigned t = 0; t <= key.u; ++t) {
    SymbolicValue inner;
    for (auto n : divisors(static_cast<std::uint64_t>(key.d))) inner += source_.exact(coefficient_index(key, t, n));
    sum += sign * inner;
    sign = sign * minus_eps;
  }
  sum *= AlgebraicReal::sqrt_of(static_cast<std::uint64_t>(key.nu));
  std::unique_lock lock(mutex_);
  return exact_cache_.try_emplace(key, std::move(sum)).first->second;
}

SymbolicValue LiftEvaluator::exact(const HurwitzQuaternion& x) const {
  const auto key = lift_key(x);
  return key ? exact(*key) : SymbolicValue();
}

double LiftEvaluator::numeric(const LiftKey& key) const {
  {
    std::shared_lock lock(mutex_);
    auto it = numeric_cache_.find(key);
    if (it != numeric_cache_.end()) return it->second;
  }
  const auto eps = source_.epsilon_sign();
  if (!eps) throw std::domain_error("numeric lift needs a fixed eps");
  double sign = 1.0;
  double sum = 0.0;
  for (unsigned t = 0; t <= key.u; ++t) {
    double inner = 0.0;
    for (auto n : divisors(static_cast<std::uint64_t>(key.d))) inner += source_.numeric(coefficient_index(key, t, n));
    sum += sign * inner;
    sign *= -static_cast<double>(*eps);
  }
  sum *= std::sqrt(static_cast<double>(key.nu));
  std::unique_lock lock(mutex_);
  return numeric_cache_.try_emplace(key, sum).first->second;
}

double LiftEvaluator::numeric(const HurwitzQuaternion& x) const {
  const auto key = lift_key(x);
  return key ? numeric(*key) : 0.0;
}

SymbolicValue lift_coeff(const CoefficientSource& source, const HurwitzQuaternion& beta) {
  const auto key = lift_key(beta);
  if (!key) throw std::invalid_argument("lift_coeff: " + beta.to_string() + " is zero or not in S");
  return LiftEvaluator(source).exact(*key);
}

}  // namespace qll
