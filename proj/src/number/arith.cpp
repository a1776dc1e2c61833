#include "qll/number/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qll {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_split: n must be positive");
  std::uint64_t root = 1;
  std::uint64_t rad = 1;
  for (auto [p, e] : factorize(n)) {
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) rad *= p;
  }
  return {root, rad};
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::uint64_t odd_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("odd_part: n must be positive");
  while (n % 2 == 0) n /= 2;
  return n;
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t n) {
  const auto r = isqrt(n);
  return r * r == n;
}

}  // namespace qll
