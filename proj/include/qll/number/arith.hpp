#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qll {

/// Prime factorization by trial division; inputs here never exceed ~10^12.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Writes n = square * radicand with radicand squarefree; returns {sqrt(square), radicand}.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Largest odd divisor of n (n > 0).
std::uint64_t odd_part(std::uint64_t n);

/// 2-adic valuation of n (n > 0).
unsigned two_adic_valuation(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// floor(sqrt(n)) computed exactly.
std::uint64_t isqrt(std::uint64_t n);

bool is_perfect_square(std::uint64_t n);

}  // namespace qll
