#include "qll/lift/coefficient_source.hpp"

#include <mutex>
#include <stdexcept>

#include "qll/number/arith.hpp"
#include "qll/util/errors.hpp"

namespace qll {

double CoefficientSource::numeric(std::uint64_t m) const {
  const SymbolicValue v = exact(m);
  if (!v.is_constant())
    throw std::domain_error("c(-" + std::to_string(m) + ") = " + to_string(v) + " is not numeric");
  return v.constant_term().to_double();
}

HeckeGeneratedSource::HeckeGeneratedSource(HeckeSourceConfig config) : config_(std::move(config)) {
  for (auto p : config_.active_primes)
    if (!is_prime(p)) throw ConfigError("active prime " + std::to_string(p) + " is not prime");
  if (config_.epsilon && *config_.epsilon != 1 && *config_.epsilon != -1)
    throw ConfigError("eps must be +1 or -1");
  for (const auto& [m, v] : config_.seeds) {
    if (m == 0) throw ConfigError("seed index must be positive");
    for (auto p : config_.active_primes)
      if (m % p == 0)
        throw ConfigError("seed index " + std::to_string(m) + " is divisible by active prime " + std::to_string(p));
  }
}

SymbolicValue HeckeGeneratedSource::epsilon() const {
  if (config_.epsilon) return SymbolicValue(static_cast<long>(*config_.epsilon));
  return sym_epsilon();
}

SymbolicValue HeckeGeneratedSource::lambda(std::uint64_t p) const {
  auto it = config_.lambdas.find(p);
  if (it != config_.lambdas.end()) return SymbolicValue(it->second);
  return sym_lambda(p);
}

bool HeckeGeneratedSource::satisfies_recursion(std::uint64_t p) const { return config_.active_primes.count(p) > 0; }

SymbolicValue HeckeGeneratedSource::exact(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("coefficient index must be nonzero");
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
  }
  SymbolicValue v = compute(m);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(m, std::move(v)).first->second;
}

SymbolicValue HeckeGeneratedSource::compute(std::uint64_t m) const {
  if (auto it = config_.overrides.find(m); it != config_.overrides.end()) return it->second;
  for (auto p : config_.active_primes) {
    if (m % p != 0) continue;
    const std::uint64_t n = m / p;
    if (p == 2) return epsilon() * exact(n) * AlgebraicReal(make_rational(-1, 2));
    const auto pp = static_cast<std::int64_t>(p);
    SymbolicValue out = lambda(p) * exact(n) * AlgebraicReal::sqrt_of(make_rational(1, pp));
    if (n % p == 0) out -= exact(n / p) * AlgebraicReal(make_rational(1, pp));
    return out;
  }
  if (auto it = config_.seeds.find(m); it != config_.seeds.end()) return it->second;
  if (config_.free_seeds) return sym_coeff(m);
  for (auto [p, e] : factorize(m))
    if (!config_.active_primes.count(p))
      throw ConfigError("c(-" + std::to_string(m) + ") needs prime " + std::to_string(p) +
                        ", which is neither active nor covered by a seed");
  throw ConfigError("c(-" + std::to_string(m) + ") has no seed");
}

FileBackedSource::FileBackedSource(double r, int atkin_lehner, std::map<std::int64_t, FileCoefficient> table)
    : r_(r), atkin_lehner_(atkin_lehner), table_(std::move(table)) {
  if (atkin_lehner_ != 1 && atkin_lehner_ != -1) throw ConfigError("atkin_lehner must be +1 or -1");
}

SymbolicValue FileBackedSource::exact(std::uint64_t m) const {
  auto it = table_.find(-static_cast<std::int64_t>(m));
  if (it == table_.end()) return {};
  if (!it->second.exact) throw std::domain_error("c(-" + std::to_string(m) + ") is stored as a float only");
  return SymbolicValue(AlgebraicReal(*it->second.exact));
}

double FileBackedSource::numeric(std::uint64_t m) const {
  auto it = table_.find(-static_cast<std::int64_t>(m));
  return it == table_.end() ? 0.0 : it->second.approx;
}

}  // namespace qll
