#include "qll/cli/suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qll/hecke/norm_classes.hpp"
#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/equivariance.hpp"
#include "qll/lift/lift.hpp"
#include "qll/number/arith.hpp"
#include "qll/quaternion/generators.hpp"
#include "qll/satake/satake.hpp"
#include "qll/theta/bessel.hpp"
#include "qll/theta/dirichlet.hpp"
#include "qll/theta/eval_lift.hpp"
#include "qll/theta/theta.hpp"

namespace qll {

namespace {

void fail_with(Report& r, nlohmann::json witness) {
  r.status = worst(r.status, Status::fail);
  r.witnesses.push_back(std::move(witness));
}

void expect(Report& r, bool ok, const std::string& what, nlohmann::json detail = nlohmann::json::object()) {
  if (ok) return;
  detail["check"] = what;
  fail_with(r, std::move(detail));
}

std::string eps_label(std::optional<int> eps) { return eps ? std::to_string(*eps) : "symbolic"; }

Rational random_rational(std::mt19937_64& rng, int bound, int den) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  int k = 0;
  while (k == 0) k = dist(rng);
  return make_rational(Integer(k), Integer(den));
}

template <class F>
Report timed(const SuiteOptions& options, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = body();
  if (options.timing) r.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CoefficientFile synthetic_coefficients(std::size_t count, std::uint64_t seed, double r, int atkin_lehner) {
  std::mt19937_64 rng(seed);
  CoefficientFile out;
  out.r = r;
  out.atkin_lehner = atkin_lehner;
  for (std::size_t m = 1; m <= count; ++m) {
    FileCoefficient c;
    c.exact = random_rational(rng, 16, 8);
    c.approx = to_double(*c.exact);
    out.coefficients[-static_cast<std::int64_t>(m)] = c;
  }
  return out;
}

HeckeSourceConfig equivariance_config(std::int64_t p, std::optional<int> eps, std::optional<std::uint64_t> seed,
                                      std::int64_t norm_bound) {
  HeckeSourceConfig cfg;
  cfg.active_primes = {static_cast<std::uint64_t>(p)};
  cfg.epsilon = eps;
  if (seed) {
    std::mt19937_64 rng(*seed);
    if (p != 2) cfg.lambdas[static_cast<std::uint64_t>(p)] = AlgebraicReal(random_rational(rng, 6, 3));
    // Shape c reaches nu(p beta) = p^2 nu(beta), i.e. indices up to p^2 * bound / 2.
    const auto top = static_cast<std::uint64_t>(p * p * norm_bound / 2);
    for (std::uint64_t m = 1; m <= top; ++m)
      if (m % static_cast<std::uint64_t>(p) != 0) cfg.seeds[m] = SymbolicValue(AlgebraicReal(random_rational(rng, 9, 5)));
  }
  return cfg;
}

Report run_cp(const std::vector<std::int64_t>& primes) {
  Report r;
  r.suite = "cp";
  r.parameters["primes"] = primes;
  for (auto p : primes) {
    const auto& c = enumerate_cp(p);
    const auto expected = static_cast<std::size_t>(p + 1);
    r.results[std::to_string(p)] = {{"classes", c.representatives.size()}, {"raw_count", c.raw_count}};
    expect(r, c.representatives.size() == expected && c.raw_count == 24 * expected, "#C_p = p + 1",
           {{"p", p}, {"classes", c.representatives.size()}, {"raw_count", c.raw_count}});
  }
  return r;
}

Report run_fundlemma(const std::vector<std::int64_t>& primes, std::int64_t norm_bound) {
  Report r;
  r.suite = "fundlemma";
  r.parameters = {{"primes", primes}, {"bound", norm_bound}};
  for (auto p : primes) {
    const auto sweep = divisibility_sweep(p, norm_bound);
    r.results[std::to_string(p)] = {
        {"checked", sweep.checked}, {"mismatches", sweep.mismatches}, {"square_hits", sweep.square_hits}};
    for (const auto& w : sweep.witnesses)
      fail_with(r, {{"p", p},
                    {"beta", to_json(w.beta)},
                    {"side", w.side == UnitSide::right ? "right" : "left"},
                    {"count", w.count},
                    {"expected", w.expected},
                    {"square_divides", w.square_divides}});
  }
  return r;
}

Report run_cosets() {
  Report r;
  r.suite = "cosets";
  const auto record = [&](CosetType type, std::int64_t p) {
    const auto c = coset_counts(type, p);
    r.results[to_string(type) + "/" + std::to_string(p)] = {{"from_lemma", c.from_lemma}, {"oracle", c.oracle}};
    expect(r, c.from_lemma == c.oracle, "family count equals oracle",
           {{"type", to_string(type)}, {"p", p}, {"from_lemma", c.from_lemma}, {"oracle", c.oracle}});
    return c;
  };
  for (std::int64_t p : {3, 5, 7})
    for (auto type : {CosetType::odd_a, CosetType::odd_b, CosetType::odd_c}) record(type, p);
  const auto even = record(CosetType::even, 2);
  expect(r, even.from_lemma == 5, "p = 2 count is 5", {{"from_lemma", even.from_lemma}});
  return r;
}

Report run_structure(std::uint64_t seed, std::size_t words, std::size_t max_length) {
  Report r;
  r.suite = "structure";
  r.parameters = {{"seed", seed}, {"words", words}, {"max_length", max_length}};
  const bool s_ok = verify_s_equals_w2O();
  r.results["s_equals_varpi_o"] = s_ok;
  expect(r, s_ok, "S = varpi_2 O");
  const bool dual_ok = dual_pairing_check(24);
  r.results["dual_pairing"] = dual_ok;
  expect(r, dual_ok, "Re(S O) in Z");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::size_t round_trips = 0;
  for (std::size_t i = 0; i < words; ++i) {
    const auto word = random_generator_word(rng, len(rng));
    const auto m = recompose(word);
    const auto d = generator_decompose(m);
    const bool ok = d.invertible && recompose(d.word) == m;
    if (ok)
      ++round_trips;
    else
      fail_with(r, {{"check", "generator round trip"}, {"matrix", m.to_string()}});
  }
  r.results["round_trips"] = round_trips;

  const QuaternionMatrix2 singular{HurwitzQuaternion::varpi(), {}, {}, HurwitzQuaternion::one()};
  const bool detected = !generator_decompose(singular).invertible;
  r.results["non_invertible_detected"] = detected;
  expect(r, detected, "diag(varpi_2, 1) reported non-invertible");
  return r;
}

Report run_equivariance(const HeckeOperatorId& op, std::optional<int> eps, std::int64_t norm_bound,
                        std::optional<std::uint64_t> seed) {
  Report r;
  r.suite = "equivariance " + op.to_string() + " eps=" + eps_label(eps);
  r.parameters = {{"p", op.p}, {"operator", op.to_string()}, {"bound", norm_bound}, {"epsilon", eps_label(eps)}};
  if (seed) r.parameters["seed"] = *seed;
  HeckeGeneratedSource source(equivariance_config(op.p, eps, seed, norm_bound));
  const auto rep = verify_equivariance(op, source, norm_bound);
  r.results = {{"eigenvalue", to_json(rep.eigenvalue)},
               {"checked", rep.checked},
               {"classes", rep.distinct_classes},
               {"violations", rep.violation_count}};
  for (const auto& w : rep.witnesses) fail_with(r, {{"beta", to_json(w.beta)}, {"difference", to_json(w.difference)}});
  if (rep.violation_count > 0 && r.witnesses.empty()) fail_with(r, {{"violations", rep.violation_count}});
  return r;
}

Report run_dirichlet(unsigned l, std::int64_t n_max, std::optional<std::size_t> nu) {
  Report r;
  r.suite = "dirichlet l=" + std::to_string(l);
  r.parameters = {{"l", l}, {"N", n_max}};
  if (nu) r.parameters["nu"] = *nu;
  const auto& basis = harmonic_basis(l);
  for (const auto& p : basis) {
    if (nu && p.nu != *nu) continue;
    for (std::optional<int> eps : {std::optional<int>(), std::optional<int>(1), std::optional<int>(-1)}) {
      HeckeSourceConfig cfg;
      cfg.active_primes = {2};
      cfg.epsilon = eps;
      HeckeGeneratedSource source(cfg);
      const auto rep = dirichlet_identity_check(p, source, n_max);
      r.results["nu=" + std::to_string(p.nu) + " eps=" + eps_label(eps)] = {
          {"branch", rep.branch}, {"eps_l_nu", p.eigenvalue.to_string()},
          {"nonzero_indices", rep.nonzero_indices}, {"mismatches", rep.mismatch_count}};
      for (const auto& m : rep.mismatches)
        fail_with(r, {{"nu", p.nu}, {"epsilon", eps_label(eps)}, {"n", m.n}, {"lhs", to_json(m.lhs)}, {"rhs", to_json(m.rhs)}});
    }
  }
  return r;
}

Report run_theta(std::int64_t os_bound, double tol) {
  Report r;
  r.suite = "theta";
  r.parameters = {{"os_bound", os_bound}, {"tol", tol}};
  for (unsigned l : {0u, 2u, 4u})
    for (const auto& p : harmonic_basis(l)) {
      const auto res = verify_o_s_identity(p, os_bound);
      if (!res.holds) fail_with(r, {{"check", "O-vs-S identity"}, {"l", l}, {"nu", p.nu}, {"m", res.first_mismatch}});
    }
  r.results["os_identity_degrees"] = {0, 2, 4};

  const std::complex<double> points[] = {{0.3, 0.8}, {-0.2, 1.1}};
  std::size_t checks = 0;
  for (unsigned l : {0u, 2u})
    for (const auto& p : harmonic_basis(l))
      for (const auto& z : points) {
        const auto rep = verify_transformation(p, z, tol);
        ++checks;
        for (const auto& c : rep.checks) {
          if (c.verdict == Verdict::inconclusive) r.status = worst(r.status, Status::inconclusive);
          if (c.verdict == Verdict::fail)
            fail_with(r, {{"check", c.name}, {"l", l}, {"nu", p.nu}, {"z", {z.real(), z.imag()}}, {"error", c.error}, {"tail", c.tail}});
        }
      }
  r.results["transformation_checks"] = checks;

  const auto control = verify_transformation(harmonic_basis(0)[0], points[0], tol, 0, +1);
  const bool caught = control.checks[0].verdict == Verdict::fail;
  r.results["sign_control_detected"] = caught;
  expect(r, caught, "wrong-sign Fricke law must fail");
  return r;
}

Report run_satake(std::uint64_t seed) {
  Report r;
  r.suite = "satake";
  r.parameters = {{"seed", seed}};
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const auto rep = verify_hecke_satake_odd(p);
    for (const auto& id : rep.identities)
      if (!id.holds()) fail_with(r, {{"p", p}, {"identity", id.name}, {"lhs", to_json(id.lhs)}, {"rhs", to_json(id.rhs)}});
  }
  for (int eps : {1, -1}) {
    const auto rep = verify_satake_two(eps);
    expect(r, rep.passed(), "p = 2 Satake relations", {{"epsilon", eps}, {"hecke_value", to_json(rep.hecke_value)}});
    expect(r, rep.params.tempered == Temperedness::non_tempered, "p = 2 non-tempered", {{"epsilon", eps}});
  }

  std::vector<double> lambdas{-2, -1, 0, 1, 2};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) lambdas.push_back(dist(rng));
  std::size_t cap_checks = 0;
  for (std::uint64_t p : {3u, 5u}) {
    for (double lambda : lambdas) {
      const auto cm = cap_match(p, lambda);
      const auto params = satake_odd(p, lambda);
      ++cap_checks;
      expect(r, cm.match, "CAP multiset match", {{"p", p}, {"lambda", lambda}});
      expect(r, params.tempered == Temperedness::non_tempered, "odd p non-tempered", {{"p", p}, {"lambda", lambda}});
      std::complex<double> prod = 1.0;
      for (const auto& v : params.values) prod *= v;
      expect(r, std::abs(prod - 1.0) < 1e-9, "product of Satake values is 1", {{"p", p}, {"lambda", lambda}});
    }
    for (double lambda : {-3.0, 3.0})
      expect(r, satake_odd(p, lambda).tempered == Temperedness::non_tempered, "real-branch non-tempered",
             {{"p", p}, {"lambda", lambda}});
  }
  r.results["cap_checks"] = cap_checks;

  const auto archimedean = satake_infinity(std::nullopt);
  expect(r, classify_temperedness(archimedean) == Temperedness::tempered, "archimedean record tempered");
  SatakeParams unit_circle;
  unit_circle.p = 3;
  unit_circle.values = {std::polar(1.0, 0.4), std::polar(1.0, -0.4), std::polar(1.0, 1.1), std::polar(1.0, -1.1)};
  expect(r, classify_temperedness(unit_circle) == Temperedness::tempered, "unit-circle control tempered");
  auto perturbed = cap_match(3, 1.0);
  perturbed.induced[0] += 1e-6;
  expect(r, !multisets_match(perturbed.induced, perturbed.satake), "perturbed multiset detected");

  for (int eps : {1, -1}) {
    const AlgebraicReal mu2 = AlgebraicReal::sqrt_of(std::uint64_t{2}) * AlgebraicReal(-3L * eps);
    expect(r, two_power_eigenvalue(1, eps) == mu2, "n = 1 matches -3 sqrt2 eps", {{"epsilon", eps}});
    double partial = 0.0;
    for (unsigned n = 0; n <= 20; ++n) {
      const double v = std::abs(two_power_eigenvalue(n, eps).to_double());
      expect(r, v >= std::pow(2.0, 1.5 * n) * (1 - 1e-12), "|eigenvalue| >= 2^{3n/2}", {{"n", n}, {"epsilon", eps}});
      const double next = partial + v * v;
      expect(r, next > partial, "partial sums increase", {{"n", n}});
      partial = next;
    }
    r.results["two_power_partial_sum_eps=" + std::to_string(eps)] = partial;
  }
  return r;
}

Report run_lift_eval(std::uint64_t seed, std::int64_t norm_bound) {
  Report r;
  r.suite = "lift-eval";
  r.parameters = {{"seed", seed}, {"bound", norm_bound}};

  double worst_residual = 0.0;
  for (double rr : {0.0, 1.0, 5.0})
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
      const double h = 1e-3;
      const double k0 = bessel_k_imag(rr, y);
      const double kp = bessel_k_imag(rr, y + h);
      const double km = bessel_k_imag(rr, y - h);
      const double d1 = (kp - km) / (2 * h);
      const double d2 = (kp - 2 * k0 + km) / (h * h);
      worst_residual = std::max(worst_residual, std::abs(y * y * d2 + y * d1 - (y * y - rr * rr) * k0));
      expect(r, bessel_k_imag(-rr, y) == k0, "K even in r", {{"r", rr}, {"y", y}});
      // Below y = |r| the function oscillates, so decay is only asserted past the turning point.
      if (y >= 1 && y >= rr) expect(r, bessel_k_imag(rr, 2 * y) < k0, "K decays", {{"r", rr}, {"y", y}});
    }
  r.results["bessel_ode_residual"] = worst_residual;
  expect(r, worst_residual <= 1e-6, "Bessel ODE residual", {{"residual", worst_residual}});

  const auto file = synthetic_coefficients(10, seed, 1.0, 1);
  const auto source = make_source(file);
  const std::array<std::array<double, 4>, 2> points{{{0, 0, 0, 0}, {0.13, 0.27, -0.41, 0.08}}};
  const double y = 1.0;
  const std::array<std::array<double, 4>, 4> shifts{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0.5, 0.5, 0.5, 0.5}}};
  double worst_shift = 0.0;
  double worst_twist = 0.0;
  for (const auto& x : points) {
    const double base = eval_lift(*source, x, y, norm_bound).value;
    for (const auto& v : shifts) {
      std::array<double, 4> xv;
      for (int i = 0; i < 4; ++i) xv[i] = x[i] + v[i];
      worst_shift = std::max(worst_shift, std::abs(eval_lift(*source, xv, y, norm_bound).value - base));
    }
    for (const auto& u : units()) {
      const double a0 = u[0] / 2.0, a1 = u[1] / 2.0, a2 = u[2] / 2.0, a3 = u[3] / 2.0;
      const std::array<double, 4> ux{a0 * x[0] - a1 * x[1] - a2 * x[2] - a3 * x[3], a0 * x[1] + a1 * x[0] + a2 * x[3] - a3 * x[2],
                                     a0 * x[2] - a1 * x[3] + a2 * x[0] + a3 * x[1], a0 * x[3] + a1 * x[2] - a2 * x[1] + a3 * x[0]};
      worst_twist = std::max(worst_twist, std::abs(eval_lift(*source, ux, y, norm_bound).value - base));
    }
  }
  r.results["translation_error"] = worst_shift;
  r.results["unit_twist_error"] = worst_twist;
  expect(r, worst_shift <= 1e-6, "translation invariance", {{"error", worst_shift}});
  expect(r, worst_twist <= 1e-6, "unit twist invariance", {{"error", worst_twist}});

  const FileBackedSource zero(1.0, 1, {});
  const double z = eval_lift(zero, points[1], y, norm_bound).value;
  expect(r, z == 0.0, "zero source gives zero", {{"value", z}});
  return r;
}

Report run_nonvanishing() {
  Report r;
  r.suite = "nonvanishing";
  for (std::uint64_t n0 : {1u, 2u, 3u, 5u}) {
    HeckeSourceConfig cfg;
    for (std::uint64_t m = 1; m < n0; ++m) cfg.seeds[m] = SymbolicValue();
    HeckeGeneratedSource source(cfg);
    const SymbolicValue expected = sym_coeff(n0) * AlgebraicReal::sqrt_of(2 * n0);
    std::size_t checked = 0;
    for (const auto& beta0 : enumerate_o_by_norm(static_cast<std::int64_t>(n0))) {
      const auto beta = HurwitzQuaternion::varpi() * beta0;
      const auto value = lift_coeff(source, beta);
      ++checked;
      if (!(value == expected))
        fail_with(r, {{"N0", n0}, {"beta", to_json(beta)}, {"value", to_json(value)}, {"expected", to_json(expected)}});
    }
    r.results["N0=" + std::to_string(n0)] = {{"checked", checked}, {"expected", to_json(expected)}};
  }
  return r;
}

Report run_all(const SuiteOptions& options) {
  Report all;
  all.suite = "all";
  all.parameters = {{"quick", options.quick}, {"seed", options.seed}};
  const bool q = options.quick;
  const auto add = [&](auto&& body) { all.add_suite(timed(options, body)); };

  add([&] { return run_cp({3, 5, 7, 11, 13}); });
  add([&] { return run_fundlemma({3, 5, 7}, q ? 100 : 400); });
  add([&] { return run_cosets(); });
  add([&] { return run_structure(options.seed, q ? 50 : 200, 30); });
  const std::int64_t eq_bound = q ? 60 : 240;
  for (std::optional<int> eps : {std::optional<int>(), std::optional<int>(1), std::optional<int>(-1)})
    add([&] { return run_equivariance({2, HeckeShape::two}, eps, eq_bound, std::nullopt); });
  for (std::int64_t p : {3, 5})
    for (auto shape : {HeckeShape::a, HeckeShape::b, HeckeShape::c})
      add([&] { return run_equivariance({p, shape}, std::nullopt, eq_bound, std::nullopt); });
  for (unsigned l : {0u, 2u}) add([&] { return run_dirichlet(l, q ? 40 : 200, std::nullopt); });
  add([&] { return run_theta(q ? 10 : 30, 1e-8); });
  add([&] { return run_satake(options.seed); });
  add([&] { return run_lift_eval(options.seed, q ? 100 : 400); });
  add([&] { return run_nonvanishing(); });
  return all;
}

}  // namespace qll
