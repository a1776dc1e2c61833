#include "qll/satake/satake.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qll/number/arith.hpp"

namespace qll {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

void require_sign(int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

// Laurent polynomial in eta with coefficients in the radical tower.
using Laurent = std::map<int, AlgebraicReal>;

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] = out[i + j] + x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Laurent add(Laurent a, const Laurent& b) {
  for (const auto& [i, x] : b) a[i] = a[i] + x;
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  return a;
}

// Rewrites an eta <-> eta^-1 symmetric Laurent polynomial in lambda = eta + eta^-1.
SymbolicValue to_lambda(Laurent f, std::uint64_t p) {
  const SymbolicValue lambda = sym_lambda(p);
  SymbolicValue out;
  const Laurent sum{{1, AlgebraicReal(1)}, {-1, AlgebraicReal(1)}};
  while (!f.empty()) {
    const int k = f.rbegin()->first;
    const AlgebraicReal c = f.rbegin()->second;
    if (k < 0) throw std::logic_error("Laurent polynomial is not symmetric");
    if (k == 0) {
      out += SymbolicValue(c);
      break;
    }
    Laurent power{{0, AlgebraicReal(1)}};
    SymbolicValue lambda_power(1L);
    for (int i = 0; i < k; ++i) {
      power = multiply(power, sum);
      lambda_power = lambda_power * lambda;
    }
    for (auto& [i, x] : power) x = -(x * c);
    f = add(std::move(f), power);
    out += lambda_power * SymbolicValue(c);
  }
  return out;
}

std::complex<double> eta_of(double lambda) {
  // Real branch for |lambda| >= 2, unit-circle branch otherwise.
  if (std::abs(lambda) >= 2.0) return {(lambda + std::copysign(std::sqrt(lambda * lambda - 4.0), lambda)) / 2.0, 0.0};
  return {lambda / 2.0, std::sqrt(4.0 - lambda * lambda) / 2.0};
}

std::vector<std::complex<double>> twisted_pair(std::uint64_t p, std::complex<double> eta) {
  const double s = std::sqrt(static_cast<double>(p));
  return {s * eta, s / eta, eta / s, 1.0 / (s * eta)};
}

}  // namespace

std::string to_string(Temperedness t) {
  switch (t) {
    case Temperedness::tempered:
      return "tempered";
    case Temperedness::non_tempered:
      return "non-tempered";
    case Temperedness::undetermined:
      return "undetermined";
  }
  return "?";
}

SatakeParams satake_odd(std::uint64_t p, double lambda) {
  require_odd_prime(p);
  SatakeParams out;
  out.p = p;
  out.values = twisted_pair(p, eta_of(lambda));
  out.tempered = classify_temperedness(out);
  return out;
}

SatakeParams satake_odd_symbolic(std::uint64_t p) {
  require_odd_prime(p);
  SatakeParams out;
  out.p = p;
  const std::string ps = std::to_string(p);
  const std::string plus = "(lambda_" + ps + " + sqrt(lambda_" + ps + "^2 - 4))/2";
  const std::string minus = "(lambda_" + ps + " - sqrt(lambda_" + ps + "^2 - 4))/2";
  out.symbolic = {ps + "^(1/2)*" + plus, ps + "^(1/2)*" + minus, ps + "^(-1/2)*" + plus, ps + "^(-1/2)*" + minus};
  out.tempered = Temperedness::undetermined;
  out.note = "symbolic parameters; moduli depend on lambda_" + ps;
  return out;
}

SatakeParams satake_two(int eps) {
  require_sign(eps);
  SatakeParams out;
  out.p = 2;
  const AlgebraicReal root2 = AlgebraicReal::sqrt_of(std::uint64_t{2});
  const AlgebraicReal e(static_cast<long>(eps));
  out.exact = {-(root2 * e), -(e * root2.inverse())};
  for (const auto& v : out.exact) out.values.emplace_back(v.to_double(), 0.0);
  out.tempered = classify_temperedness(out);
  return out;
}

SatakeParams satake_infinity(std::optional<double> r) {
  SatakeParams out;
  out.p = 0;
  out.r = r;
  out.tempered = Temperedness::tempered;
  out.note = "unitary spherical principal series; recorded, not computed";
  return out;
}

Temperedness classify_temperedness(const SatakeParams& params, double tol) {
  if (params.p == 0) return Temperedness::tempered;
  if (params.values.empty()) return Temperedness::undetermined;
  for (const auto& v : params.values)
    if (std::abs(std::abs(v) - 1.0) > tol) return Temperedness::non_tempered;
  return Temperedness::tempered;
}

std::vector<SymbolicValue> satake_symmetric_functions(std::uint64_t p) {
  require_odd_prime(p);
  const AlgebraicReal s = AlgebraicReal::sqrt_of(p);
  const AlgebraicReal si = s.inverse();
  const Laurent values[] = {{{1, s}}, {{-1, s}}, {{1, si}}, {{-1, si}}};
  // prod (1 + alpha_i X), coefficient of X^k is e_k.
  std::vector<Laurent> e(5);
  e[0] = {{0, AlgebraicReal(1)}};
  for (const auto& v : values)
    for (int k = 4; k >= 1; --k) e[k] = add(e[k], multiply(e[k - 1], v));
  std::vector<SymbolicValue> out;
  for (int k = 1; k <= 4; ++k) out.push_back(to_lambda(e[k], p));
  return out;
}

bool SatakeOddReport::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& i) { return i.holds(); });
}

SatakeOddReport verify_hecke_satake_odd(std::uint64_t p) {
  SatakeOddReport report;
  report.p = p;
  report.symmetric = satake_symmetric_functions(p);
  const SymbolicValue lambda = sym_lambda(p);
  const long pl = static_cast<long>(p);
  const AlgebraicReal p32 = AlgebraicReal(pl) * AlgebraicReal::sqrt_of(p);
  const SymbolicValue mu2 = lambda * SymbolicValue(AlgebraicReal(pl * (pl + 1)));
  const SymbolicValue mu3 = lambda * lambda * SymbolicValue(AlgebraicReal(pl * pl)) + SymbolicValue(pl * pl * pl + pl);
  report.identities.push_back({"p^(3/2) e1 = p(p+1) lambda", report.symmetric[0] * SymbolicValue(p32), mu2});
  report.identities.push_back({"p^2 e2 = p^2 lambda^2 + p^3 + p", report.symmetric[1] * SymbolicValue(pl * pl), mu3});
  report.identities.push_back({"p^(3/2) e3 = p(p+1) lambda", report.symmetric[2] * SymbolicValue(p32), mu2});
  report.identities.push_back({"e4 = 1", report.symmetric[3], SymbolicValue(1L)});
  return report;
}

SatakeTwoReport verify_satake_two(int eps) {
  SatakeTwoReport report;
  report.eps = eps;
  report.params = satake_two(eps);
  const auto& a = report.params.exact;
  report.product = a[0] * a[1];
  report.hecke_value = AlgebraicReal(2) * (a[0] + a[1]);
  report.expected = AlgebraicReal::sqrt_of(std::uint64_t{2}) * AlgebraicReal(-3L * eps);
  return report;
}

bool multisets_match(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  // Backtracking keeps the matching exact-order-free even when values nearly coincide.
  const auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || std::abs(a[i] - b[j]) > tol) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return solve(solve, 0);
}

CapMatchResult cap_match(std::uint64_t p, double lambda, double tol) {
  require_odd_prime(p);
  CapMatchResult out;
  out.p = p;
  out.lambda = lambda;
  // eta0^2 - lambda eta0 + 1 = 0, solved independently of the Satake branch choice.
  const std::complex<double> disc = std::sqrt(std::complex<double>(lambda * lambda - 4.0, 0.0));
  out.eta0 = (lambda - disc) / 2.0;
  out.induced = twisted_pair(p, out.eta0);
  out.satake = satake_odd(p, lambda).values;
  out.match = multisets_match(out.induced, out.satake, tol);
  return out;
}

AlgebraicReal two_power_eigenvalue(unsigned n, int eps) {
  require_sign(eps);
  const AlgebraicReal root2 = AlgebraicReal::sqrt_of(std::uint64_t{2});
  const AlgebraicReal value = pow(root2, 3 * n) + pow(root2, n);
  return (n % 2 == 0 || eps == -1) ? value : -value;
}

}  // namespace qll
