#include "qll/theta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qll/lattice/lattice_s.hpp"

namespace qll {

namespace {

using cd = std::complex<double>;

CyclotomicValue shell_sum(const HarmonicPolynomial& p, const std::vector<HurwitzQuaternion>& shell) {
  if (shell.empty()) return {};
  const auto mons = monomials(p.l);
  MomentTable table;
  for (const auto& x : shell) accumulate_moments(table, mons, x);
  return eval_from_moments(p, table);
}

CyclotomicValue value_at_zero(const HarmonicPolynomial& p) {
  // Only the constant monomial survives at the origin.
  auto it = p.coeffs.find(Exponents{0, 0, 0, 0});
  return it == p.coeffs.end() ? CyclotomicValue() : it->second;
}

double tail_term(const HarmonicPolynomial& p, double cp, std::int64_t m, double y) {
  const double r2 = 2.0 * static_cast<double>(m);
  const double count = 2.0 * std::pow(4.0 * std::sqrt(r2) + 1.0, 3);
  return count * cp * std::pow(r2, p.l / 2.0) * std::exp(-2.0 * std::numbers::pi * static_cast<double>(m) * y);
}

}  // namespace

std::vector<CyclotomicValue> theta_coeffs(const HarmonicPolynomial& p, std::int64_t max_m) {
  std::vector<CyclotomicValue> out(static_cast<std::size_t>(std::max<std::int64_t>(max_m, 0) + 1));
  out[0] = value_at_zero(p);
  for (std::int64_t m = 1; m <= max_m; ++m) out[m] = shell_sum(p, enumerate_by_norm(2 * m));
  return out;
}

OSIdentityResult verify_o_s_identity(const HarmonicPolynomial& p, std::int64_t max_m) {
  // eps^-1 2^{-l/2}
  const CyclotomicValue factor = p.eigenvalue.inverse() *
                                 CyclotomicValue(make_rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(p.l / 2)));
  const auto b = theta_coeffs(p, max_m);
  OSIdentityResult out;
  for (std::int64_t m = 0; m <= max_m; ++m) {
    const CyclotomicValue lhs = m == 0 ? value_at_zero(p) : shell_sum(p, enumerate_o_by_norm(m));
    if (lhs != factor * b[m]) {
      out.holds = false;
      out.first_mismatch = m;
      return out;
    }
  }
  return out;
}

double theta_tail_bound(const HarmonicPolynomial& p, std::int64_t max_m, double y) {
  if (y <= 0) throw std::invalid_argument("theta tail: Im z must be positive");
  const double cp = p.coefficient_bound();
  double sum = 0.0;
  for (std::int64_t m = max_m + 1;; ++m) {
    const double t = tail_term(p, cp, m, y);
    sum += t;
    const double ratio = tail_term(p, cp, m + 1, y) / t;
    // The term ratio decreases in m once below 1, so a geometric bound closes the sum.
    if (ratio < 0.9 && t * ratio / (1.0 - ratio) < 1e-6 * sum + 1e-300) {
      sum += t * ratio / (1.0 - ratio);
      break;
    }
    if (m > max_m + 1000000) return std::numeric_limits<double>::infinity();
  }
  return sum;
}

std::int64_t theta_truncation_for(const HarmonicPolynomial& p, double y, double target, std::int64_t cap) {
  for (std::int64_t m = 1; m <= cap; ++m)
    if (theta_tail_bound(p, m, y) < target) return m;
  return cap;
}

ThetaValue theta_eval(const HarmonicPolynomial& p, const std::vector<CyclotomicValue>& coeffs, cd z) {
  if (z.imag() <= 0) throw std::invalid_argument("theta_eval: Im z must be positive");
  ThetaValue out;
  out.value = 0;
  const cd two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (is_zero(coeffs[m])) continue;
    out.value += coeffs[m].to_complex() * std::exp(two_pi_i * static_cast<double>(m) * z);
  }
  out.tail_bound = theta_tail_bound(p, static_cast<std::int64_t>(coeffs.size()) - 1, z.imag());
  return out;
}

ThetaValue theta_eval(const HarmonicPolynomial& p, cd z, std::int64_t max_m) {
  if (z.imag() <= 0) throw std::invalid_argument("theta_eval: Im z must be positive");
  return theta_eval(p, theta_coeffs(p, max_m), z);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict TransformationReport::verdict() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
    if (c.verdict == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

TransformationReport verify_transformation(const HarmonicPolynomial& p, cd z, double tol, std::int64_t max_m, int sign) {
  if (z.imag() <= 0) throw std::invalid_argument("verify_transformation: Im z must be positive");
  const cd fricke = -1.0 / (2.0 * z);
  const cd gamma_point = z / (2.0 * z + 1.0);
  const double min_y = std::min({z.imag(), fricke.imag(), gamma_point.imag()});

  const auto run = [&](std::int64_t truncation) {
    TransformationReport report;
    report.truncation = truncation;
    const auto coeffs = theta_coeffs(p, report.truncation);
    const auto at = [&](cd w) { return theta_eval(p, coeffs, w); };

    const auto judge = [tol](TransformationCheck& c) {
      if (c.tail >= tol)
        c.verdict = Verdict::inconclusive;
      else
        c.verdict = c.error <= tol ? Verdict::pass : Verdict::fail;
    };

    const ThetaValue tz = at(z);
    const double weight = static_cast<double>(p.l + 2);
    {
      const cd eps_inv = p.eigenvalue.inverse().to_complex();
      const cd factor = static_cast<double>(sign) * eps_inv * std::pow(2.0, p.l / 2.0 + 1.0) * std::pow(z, weight);
      const ThetaValue tw = at(fricke);
      TransformationCheck c{"fricke", std::abs(tw.value - factor * tz.value), tw.tail_bound + std::abs(factor) * tz.tail_bound};
      judge(c);
      report.checks.push_back(c);
    }
    {
      const ThetaValue t1 = at(z + 1.0);
      TransformationCheck c{"translation", std::abs(t1.value - tz.value), t1.tail_bound + tz.tail_bound};
      judge(c);
      report.checks.push_back(c);
    }
    {
      const cd factor = std::pow(2.0 * z + 1.0, weight);
      const ThetaValue tg = at(gamma_point);
      TransformationCheck c{"gamma0(2)", std::abs(tg.value - factor * tz.value), tg.tail_bound + std::abs(factor) * tz.tail_bound};
      judge(c);
      report.checks.push_back(c);
    }
    return report;
  };

  if (max_m > 0) return run(max_m);
  // The automorphy factors scale the tail at z, so grow M until every check's bound is below tol / 10.
  std::int64_t m = theta_truncation_for(p, min_y, tol / 10.0);
  for (;;) {
    auto report = run(m);
    const bool tight = std::all_of(report.checks.begin(), report.checks.end(),
                                   [tol](const TransformationCheck& c) { return c.tail < tol / 10.0; });
    if (tight || m >= 4000) return report;
    m = m * 3 / 2 + 1;
  }
}

}  // namespace qll
