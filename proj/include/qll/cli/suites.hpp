#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qll/io/coefficient_file.hpp"
#include "qll/io/report.hpp"
#include "qll/lift/hecke_action.hpp"

namespace qll {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SuiteOptions {
  bool quick = false;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

/// Synthetic file-backed coefficients c(-1..-count): seeded rationals k/8 with |k| <= 16, nonzero.
CoefficientFile synthetic_coefficients(std::size_t count, std::uint64_t seed, double r, int atkin_lehner);

/// Hecke-generated source for equivariance at p; with a seed, lambda_p and seeds become seeded rationals.
HeckeSourceConfig equivariance_config(std::int64_t p, std::optional<int> eps, std::optional<std::uint64_t> seed,
                                      std::int64_t norm_bound);

Report run_cp(const std::vector<std::int64_t>& primes);
Report run_fundlemma(const std::vector<std::int64_t>& primes, std::int64_t norm_bound);
Report run_cosets();
Report run_structure(std::uint64_t seed, std::size_t words = 200, std::size_t max_length = 30);
Report run_equivariance(const HeckeOperatorId& op, std::optional<int> eps, std::int64_t norm_bound,
                        std::optional<std::uint64_t> seed);
Report run_dirichlet(unsigned l, std::int64_t n_max, std::optional<std::size_t> nu);
Report run_theta(std::int64_t os_bound, double tol);
Report run_satake(std::uint64_t seed);
Report run_lift_eval(std::uint64_t seed, std::int64_t norm_bound);
Report run_nonvanishing();

/// Every suite above at acceptance bounds (reduced with quick), as one report.
Report run_all(const SuiteOptions& options);

}  // namespace qll
