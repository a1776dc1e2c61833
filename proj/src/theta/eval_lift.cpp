#include "qll/theta/eval_lift.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/lift.hpp"
#include "qll/number/arith.hpp"
#include "qll/theta/bessel.hpp"
#include "qll/util/errors.hpp"
#include "qll/util/parallel.hpp"

namespace qll {

namespace {

// Largest |c(-m)| the source can produce for the tail estimate.
double coefficient_sup(const CoefficientSource& source) {
  if (const auto* file = dynamic_cast<const FileBackedSource*>(&source)) {
    double sup = 0.0;
    for (const auto& [n, c] : file->table()) sup = std::max(sup, std::abs(c.approx));
    return sup;
  }
  throw ConfigError("eval_lift needs a file-backed source");
}

// |A(beta)| <= sqrt(n) (u + 1) tau(d) sup|c|, with u + 1 <= log2 n and tau(d) <= 2 sqrt(n);
// the shell of norm n in S has r_O(n/2) <= 12 n (1 + ln n) points.
double tail_term(std::int64_t n, double y, double sup) {
  const double dn = static_cast<double>(n);
  const double count = 12.0 * dn * (1.0 + std::log(dn));
  const double a = std::sqrt(dn) * std::log2(dn) * 2.0 * std::sqrt(dn) * sup;
  return count * a * y * y * bessel_k_bound(2.0 * std::numbers::pi * std::sqrt(dn) * y);
}

}  // namespace

LiftValue eval_lift(const CoefficientSource& source, const std::array<double, 4>& x, double y, std::int64_t norm_bound) {
  const auto r = source.spectral_parameter();
  if (!r) throw ConfigError("eval_lift: coefficient source has no spectral parameter r");
  if (!(y > 0)) throw std::invalid_argument("eval_lift: y must be positive");
  const double sup = coefficient_sup(source);

  LiftValue out;
  const LiftEvaluator lift(source);
  std::vector<std::int64_t> norms;
  for (std::int64_t n = 2; n <= norm_bound; n += 2) norms.push_back(n);
  std::vector<double> partial(norms.size(), 0.0);
  std::vector<std::size_t> counts(norms.size(), 0);

  parallel_for(norms.size(), [&](std::size_t idx) {
    const std::int64_t n = norms[idx];
    const auto& shell = enumerate_by_norm(n);
    counts[idx] = shell.size();
    if (sup == 0.0) return;
    const double radial = y * y * bessel_k_imag(*r, 2.0 * std::numbers::pi * std::sqrt(static_cast<double>(n)) * y);
    std::map<LiftKey, double> per_key;
    for (const auto& beta : shell) {
      // Re(beta x) in doubled coordinates of beta.
      const double re = (beta[0] * x[0] - beta[1] * x[1] - beta[2] * x[2] - beta[3] * x[3]) / 2.0;
      per_key[*lift_key(beta)] += std::cos(2.0 * std::numbers::pi * re);
    }
    double s = 0.0;
    for (const auto& [key, phase] : per_key) s += lift.numeric(key) * phase;
    partial[idx] = s * radial;
  });
  for (std::size_t i = 0; i < norms.size(); ++i) {
    out.value += partial[i];
    out.terms += counts[i];
  }

  if (sup > 0.0) {
    double tail = 0.0;
    std::int64_t n = std::max<std::int64_t>(norm_bound + 1 + (norm_bound + 1) % 2, 2);
    for (;; n += 2) {
      const double t = tail_term(n, y, sup);
      tail += t;
      if (t < 1e-18 * tail + 1e-300 && n > 2 * norm_bound + 200) break;
    }
    out.tail_bound = tail;
  }
  return out;
}

}  // namespace qll
