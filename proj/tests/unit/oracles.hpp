#pragma once

// Brute-force reference computations used by the tests. They avoid the
// library's lattice bases, caches and Euclidean machinery on purpose.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "qll/number/rational.hpp"
#include "qll/quaternion/hurwitz.hpp"

namespace oracle {

using qll::HurwitzQuaternion;
using qll::Rational;

// All elements of O with nu = m, sorted by doubled coordinates.
inline std::vector<HurwitzQuaternion> o_sphere(std::int64_t m) {
  std::vector<HurwitzQuaternion> out;
  const auto target = 4 * m;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target))) + 1;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c) {
        const auto rest = target - a * a - b * b - c * c;
        if (rest < 0) continue;
        const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        if (d * d != rest) continue;
        const auto par = a & 1;
        if ((b & 1) != par || (c & 1) != par || (d & 1) != par) continue;
        out.push_back(HurwitzQuaternion::from_doubled({a, b, c, d}));
        if (d != 0) out.push_back(HurwitzQuaternion::from_doubled({a, b, c, -d}));
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool in_o(const HurwitzQuaternion& x) {
  const auto& t = x.doubled();
  const auto par = t[0] & 1;
  return (t[1] & 1) == par && (t[2] & 1) == par && (t[3] & 1) == par;
}

// x = (1+i) y for some y in O, tested through rational arithmetic: y = (1-i) x / 2.
inline bool in_s(const HurwitzQuaternion& x) {
  if (!in_o(x)) return false;
  const auto& t = x.doubled();
  // (1 - i)(t0 + t1 i + t2 j + t3 k) = (t0 + t1) + (t1 - t0) i + (t2 - t3) j + (t3 + t2) k
  const std::int64_t y[4] = {t[0] + t[1], t[1] - t[0], t[2] - t[3], t[3] + t[2]};
  for (auto v : y)
    if (v % 2 != 0) return false;
  const auto par = (y[0] / 2) & 1;
  for (auto v : y)
    if (((v / 2) & 1) != par) return false;
  return true;
}

inline HurwitzQuaternion div_varpi(const HurwitzQuaternion& x) {
  const auto& t = x.doubled();
  return HurwitzQuaternion::from_doubled({(t[0] + t[1]) / 2, (t[1] - t[0]) / 2, (t[2] - t[3]) / 2, (t[3] + t[2]) / 2});
}

struct Decomposition {
  unsigned u = 0;
  std::int64_t d = 1;
};

// beta = varpi^u d beta0, beta0 in S but not in varpi S, and no odd d' > 1 with beta0 / d' in S.
inline Decomposition decompose(HurwitzQuaternion beta) {
  Decomposition out;
  while (in_s(div_varpi(beta))) {
    beta = div_varpi(beta);
    ++out.u;
  }
  std::int64_t g = 0;
  for (auto v : beta.doubled()) g = std::gcd(g, v);
  while (g % 2 == 0 && g != 0) g /= 2;
  for (std::int64_t d = g; d >= 1; d -= 2) {
    if (g % d != 0) continue;
    const auto& t = beta.doubled();
    const auto q = HurwitzQuaternion::from_doubled({t[0] / d, t[1] / d, t[2] / d, t[3] / d});
    if (in_s(q)) {
      out.d = d;
      break;
    }
  }
  return out;
}

// A(beta) / |beta| = sum_{t <= u} sum_{n | d} (-eps)^t c(-nu / (2^{t+1} n^2)).
inline Rational lift_over_abs(const std::map<std::int64_t, Rational>& c, int eps, const HurwitzQuaternion& beta) {
  const auto nu = beta.norm4() / 4;
  const auto dec = decompose(beta);
  Rational total = 0;
  for (unsigned t = 0; t <= dec.u; ++t)
    for (std::int64_t n = 1; n <= dec.d; ++n) {
      if (dec.d % n != 0) continue;
      const auto den = (std::int64_t{1} << (t + 1)) * n * n;
      if (nu % den != 0) continue;
      const auto it = c.find(nu / den);
      if (it == c.end()) continue;
      total += (t % 2 == 1 ? -eps : 1) * it->second;
    }
  return total;
}

// K_{ir}(y) = int_0^inf exp(-y cosh t) cos(r t) dt by the trapezoid rule on the
// whole line; the integrand is even and entire, so the rule converges geometrically.
inline long double bessel_k_trapezoid(long double r, long double y, long double h = 1.0L / 256) {
  long double sum = 0.5L * std::exp(-y);
  for (long k = 1;; ++k) {
    const long double t = h * k;
    const long double e = std::exp(-y * std::cosh(t));
    sum += e * std::cos(r * t);
    if (e < 1e-30L) break;
  }
  return h * sum;
}

}  // namespace oracle
