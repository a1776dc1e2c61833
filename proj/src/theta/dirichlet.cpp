#include "qll/theta/dirichlet.hpp"

#include <stdexcept>

#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/lift.hpp"
#include "qll/theta/theta.hpp"
#include "qll/util/errors.hpp"

namespace qll {

namespace {

CyclotomicPolynomial as_cyclotomic(const SymbolicValue& v) {
  try {
    return to_cyclotomic(v);
  } catch (const std::domain_error&) {
    throw ConfigError("Dirichlet check needs coefficients in Q(sqrt2); got " + to_string(v));
  }
}

CyclotomicValue inverse_power(std::int64_t n, unsigned e) {
  Integer den = 1;
  for (unsigned i = 0; i < e; ++i) den *= Integer(static_cast<long>(n));
  return CyclotomicValue(make_rational(Integer(1), den));
}

void add_to(DirichletCoefficients& out, std::int64_t n, const CyclotomicPolynomial& v) {
  if (v.is_zero()) return;
  auto& slot = out[n];
  slot += v;
  if (slot.is_zero()) out.erase(n);
}

}  // namespace

DirichletCoefficients dirichlet_lhs(const HarmonicPolynomial& p, const CoefficientSource& source, std::int64_t n_max) {
  const LiftEvaluator lift(source);
  const auto mons = monomials(p.l);
  DirichletCoefficients out;
  for (std::int64_t n = 2; n <= n_max; n += 2) {
    std::map<LiftKey, MomentTable> groups;
    for (const auto& beta : enumerate_by_norm(n)) accumulate_moments(groups[*lift_key(beta)], mons, beta);
    // A(beta) = |beta| X(key), and |beta| cancels one factor n^{1/2}.
    const AlgebraicReal inv_root = AlgebraicReal::sqrt_of(static_cast<std::uint64_t>(n)).inverse();
    CyclotomicPolynomial total;
    for (const auto& [key, table] : groups) {
      const CyclotomicValue psum = eval_from_moments(p, table);
      if (is_zero(psum)) continue;
      total += as_cyclotomic(lift.exact(key) * inv_root) * psum;
    }
    add_to(out, n, total * inverse_power(n, p.l / 2));
  }
  return out;
}

DirichletCoefficients dirichlet_rhs(const HarmonicPolynomial& p, const CoefficientSource& source, std::int64_t n_max) {
  if (!(p.eigen_index == 0 || p.eigen_index == 4))
    throw std::invalid_argument("dirichlet_rhs: eps_{l,nu} must be +-1");
  const auto b = theta_coeffs(p, n_max / 2);
  const CyclotomicPolynomial minus_a = as_cyclotomic(source.epsilon()) * (-p.eigenvalue);

  // sum_m c(-m) b(2m) m^{-l/2}
  std::map<std::int64_t, CyclotomicPolynomial> series;
  for (std::int64_t m = 1; 2 * m <= n_max; ++m) {
    if (is_zero(b[m])) continue;
    series[m] = as_cyclotomic(source.exact(static_cast<std::uint64_t>(m))) * (b[m] * inverse_power(m, p.l / 2));
  }

  // 2^{1-l/2} * {1: 1/2, 4: -1/2} = {1: 2^{-l/2}, 4: -2^{-l/2}}
  const CyclotomicValue half_l = inverse_power(2, p.l / 2);
  const std::pair<std::int64_t, CyclotomicValue> outer[] = {{1, half_l}, {4, -half_l}};

  DirichletCoefficients out;
  CyclotomicPolynomial geometric(CyclotomicValue(1));  // (-a)^u
  for (std::int64_t two_u = 2; two_u <= n_max; two_u *= 2) {
    for (std::int64_t d = 1; two_u * d * d <= n_max; ++d)
      for (const auto& [m, term] : series) {
        const std::int64_t base = two_u * d * d * m;
        if (base > n_max) break;
        const CyclotomicPolynomial gm = geometric * term;
        for (const auto& [f, w] : outer)
          if (base * f <= n_max) add_to(out, base * f, gm * w);
      }
    geometric = geometric * minus_a;
  }
  return out;
}

DirichletReport dirichlet_identity_check(const HarmonicPolynomial& p, const CoefficientSource& source,
                                         std::int64_t n_max, std::size_t max_witnesses) {
  if (n_max < 1) throw ConfigError("Dirichlet bound must be positive");
  DirichletReport report;
  report.l = p.l;
  report.nu = p.nu;
  report.eigen_index = p.eigen_index;
  report.n_max = n_max;
  const bool real_eps = p.eigen_index == 0 || p.eigen_index == 4;
  report.branch = real_eps ? "identity" : "vanishing";

  const auto lhs = dirichlet_lhs(p, source, n_max);
  const DirichletCoefficients rhs = real_eps ? dirichlet_rhs(p, source, n_max) : DirichletCoefficients{};
  report.nonzero_indices = lhs.size();

  std::map<std::int64_t, bool> indices;
  for (const auto& [n, v] : lhs) indices[n] = true;
  for (const auto& [n, v] : rhs) indices[n] = true;
  for (const auto& [n, flag] : indices) {
    auto li = lhs.find(n);
    auto ri = rhs.find(n);
    const CyclotomicPolynomial lv = li == lhs.end() ? CyclotomicPolynomial() : li->second;
    const CyclotomicPolynomial rv = ri == rhs.end() ? CyclotomicPolynomial() : ri->second;
    if (lv == rv) continue;
    ++report.mismatch_count;
    if (report.mismatches.size() < max_witnesses) report.mismatches.push_back({n, lv, rv});
  }
  return report;
}

}  // namespace qll
