// Acceptance gate: one pass/fail line per criterion, tolerances pinned below.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qll/cli/suites.hpp"
#include "qll/hecke/norm_classes.hpp"
#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/equivariance.hpp"
#include "qll/lift/lift.hpp"
#include "qll/quaternion/generators.hpp"
#include "qll/satake/satake.hpp"
#include "qll/theta/bessel.hpp"
#include "qll/theta/dirichlet.hpp"
#include "qll/theta/eval_lift.hpp"
#include "qll/theta/theta.hpp"

using namespace qll;

namespace {

constexpr double kCpSeconds = 5.0;
constexpr double kSweepSeconds = 60.0;
constexpr double kOddEquivarianceSeconds = 300.0;
constexpr std::int64_t kSweepBound = 400;
constexpr std::int64_t kEquivarianceBound = 240;
constexpr std::int64_t kDirichletN = 200;
constexpr std::int64_t kOSBound = 30;
constexpr double kThetaTol = 1e-8;
constexpr double kThetaTail = 1e-9;
constexpr double kCapTol = 1e-9;
constexpr std::size_t kWords = 200;
constexpr std::size_t kWordLength = 30;
constexpr std::int64_t kEvalBound = 400;
constexpr double kEvalTol = 1e-6;
constexpr double kBesselTol = 1e-10;
constexpr std::uint64_t kSeed = kDefaultSeed;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note << "first failure: " << what << "; ";
    pass = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s: %s (%.2f s) %s\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), secs, o.note.str().c_str());
  std::fflush(stdout);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  criterion(1, "C_p cardinality", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
      const auto& cp = enumerate_cp(p);
      o.require(cp.representatives.size() == static_cast<std::size_t>(p + 1), "#C_" + std::to_string(p) + " = p+1");
      o.require(cp.raw_count == static_cast<std::size_t>(24 * (p + 1)), "raw count 24(p+1) at p=" + std::to_string(p));
      o.require(oracle::o_sphere(p).size() == cp.raw_count, "raw count agrees with brute sphere");
    }
    const double t = elapsed(t0);
    o.note << "time " << t << " s < " << kCpSeconds << " s; ";
    o.require(t < kCpSeconds, "runtime");
  });

  criterion(2, "divisibility sweep, nu <= 400, p in {3,5,7}", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (std::int64_t p : {3, 5, 7}) {
      const auto sweep = divisibility_sweep(p, kSweepBound);
      checked += sweep.checked;
      o.require(sweep.mismatches == 0, "0/1 dichotomy at p=" + std::to_string(p));
      o.require(sweep.square_hits == 0, "p^2 never divides at p=" + std::to_string(p));
      o.require(sweep.checked > 0, "non-empty sweep");
    }
    const double t = elapsed(t0);
    o.note << checked << " primitive beta checked; time " << t << " s < " << kSweepSeconds << " s; ";
    o.require(t < kSweepSeconds, "runtime");
  });

  criterion(3, "odd-p equivariance, symbolic sources, nu <= 240", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t p : {3, 5})
      for (auto shape : {HeckeShape::a, HeckeShape::b, HeckeShape::c}) {
        HeckeSourceConfig cfg;
        cfg.active_primes = {static_cast<std::uint64_t>(p)};
        HeckeGeneratedSource source(cfg);
        const HeckeOperatorId op{p, shape};
        const auto rep = verify_equivariance(op, source, kEquivarianceBound);
        o.require(rep.passed(), "zero difference for " + op.to_string());
        const auto lam = sym_lambda(static_cast<std::uint64_t>(p));
        const SymbolicValue expected = shape == HeckeShape::c
                                           ? lam * lam * AlgebraicReal(p * p) + SymbolicValue(p * p * p + p)
                                           : lam * AlgebraicReal(p * (p + 1));
        o.require(rep.eigenvalue == expected, "eigenvalue of " + op.to_string());
        o.require(rep.checked == s_ball(kEquivarianceBound).size(), "every beta checked");
      }
    const double t = elapsed(t0);
    o.note << "time " << t << " s < " << kOddEquivarianceSeconds << " s; ";
    o.require(t < kOddEquivarianceSeconds, "runtime");
  });

  criterion(4, "p = 2 equivariance, eigenvalue -3 sqrt2 eps, both eps", [](Outcome& o) {
    for (int eps : {1, -1}) {
      HeckeSourceConfig cfg;
      cfg.active_primes = {2};
      cfg.epsilon = eps;
      HeckeGeneratedSource source(cfg);
      const auto rep = verify_equivariance({2, HeckeShape::two}, source, kEquivarianceBound);
      o.require(rep.passed(), "zero difference at eps=" + std::to_string(eps));
      o.require(rep.eigenvalue == SymbolicValue(AlgebraicReal::radical(2, -3 * eps)), "eigenvalue at eps=" + std::to_string(eps));
    }
  });

  criterion(5, "Dirichlet identity to N = 200, l in {0,2}, both eps", [](Outcome& o) {
    std::size_t identity = 0, vanishing = 0;
    for (unsigned l : {0u, 2u})
      for (const auto& p : harmonic_basis(l))
        for (int eps : {1, -1}) {
          HeckeSourceConfig cfg;
          cfg.active_primes = {2};
          cfg.epsilon = eps;
          HeckeGeneratedSource source(cfg);
          const auto rep = dirichlet_identity_check(p, source, kDirichletN);
          const bool real = p.eigen_index == 0 || p.eigen_index == 4;
          o.require(rep.branch == (real ? "identity" : "vanishing"), "branch selection");
          o.require(rep.passed(), "l=" + std::to_string(l) + " nu=" + std::to_string(p.nu) + " eps=" + std::to_string(eps));
          (real ? identity : vanishing) += 1;
        }
    o.note << identity << " identity and " << vanishing << " vanishing checks; ";
    o.require(identity > 0, "identity branch exercised");
  });

  criterion(6, "theta identities and transformation law", [](Outcome& o) {
    for (unsigned l : {0u, 2u, 4u})
      for (const auto& p : harmonic_basis(l))
        o.require(verify_o_s_identity(p, kOSBound).holds, "O-vs-S identity l=" + std::to_string(l));
    const std::complex<double> points[] = {{0.3, 0.8}, {-0.2, 1.1}};
    double worst_tail = 0;
    for (unsigned l : {0u, 2u})
      for (const auto& p : harmonic_basis(l))
        for (const auto& z : points) {
          const auto rep = verify_transformation(p, z, kThetaTol);
          o.require(rep.verdict() == Verdict::pass, "transformation l=" + std::to_string(l));
          for (const auto& c : rep.checks) worst_tail = std::max(worst_tail, c.tail);
        }
    o.note << "worst tail bound " << worst_tail << " < " << kThetaTail << "; ";
    o.require(worst_tail < kThetaTail, "tail bound");
    const auto control = verify_transformation(harmonic_basis(0)[0], points[0], kThetaTol, 0, +1);
    o.require(control.verdict() == Verdict::fail, "sign-corrupted control fails");
  });

  criterion(7, "Satake consistency and CAP matching", [](Outcome& o) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) o.require(verify_hecke_satake_odd(p).passed(), "odd identities p=" + std::to_string(p));
    for (int eps : {1, -1}) {
      const auto rep = verify_satake_two(eps);
      o.require(rep.passed(), "p=2 exact relations");
      o.require(classify_temperedness(rep.params) == Temperedness::non_tempered, "p=2 non-tempered");
    }
    std::vector<double> lambdas{-2, -1, 0, 1, 2};
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
      double v = dist(rng);
      while (v == -2.0) v = dist(rng);
      lambdas.push_back(v);
    }
    for (std::uint64_t p : {3u, 5u})
      for (double lambda : lambdas) {
        o.require(cap_match(p, lambda, kCapTol).match, "cap_match");
        o.require(classify_temperedness(satake_odd(p, lambda)) == Temperedness::non_tempered, "odd p non-tempered");
      }
    o.require(classify_temperedness(satake_infinity(std::nullopt)) == Temperedness::tempered, "archimedean tempered");
    o.note << lambdas.size() << " lambdas per prime; ";
  });

  criterion(8, "structure: S = varpi O, generator round trips, coset counts", [](Outcome& o) {
    o.require(verify_s_equals_w2O(), "S = varpi O");
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> len(1, kWordLength);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < kWords; ++i) {
      const auto word = random_generator_word(rng, len(rng));
      const auto m = recompose(word);
      const auto d = generator_decompose(m);
      if (d.invertible && recompose(d.word) == m) ++ok;
    }
    o.note << ok << "/" << kWords << " round trips; ";
    o.require(ok == kWords, "round trips");
    for (std::int64_t p : {3, 5, 7})
      for (auto type : {CosetType::odd_a, CosetType::odd_b, CosetType::odd_c}) {
        const auto c = coset_counts(type, p);
        o.require(c.from_lemma == c.oracle, "coset count " + to_string(type) + " p=" + std::to_string(p));
      }
    const auto even = coset_counts(CosetType::even, 2);
    o.require(even.from_lemma == 5 && even.oracle == 5, "p=2 count 5");
  });

  criterion(9, "numeric lift evaluation and Bessel oracle", [](Outcome& o) {
    const auto file = synthetic_coefficients(10, kSeed, 1.0, 1);
    std::size_t nonzero = 0;
    for (const auto& [n, c] : file.coefficients) nonzero += c.approx != 0.0;
    o.require(nonzero == 10, "ten nonzero coefficients");
    const auto source = make_source(file);
    const std::array<std::array<double, 4>, 2> points{{{0, 0, 0, 0}, {0.13, 0.27, -0.41, 0.08}}};
    const std::array<std::array<double, 4>, 4> shifts{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0.5, 0.5, 0.5, 0.5}}};
    const double y = 1.0;
    double worst = 0;
    for (const auto& x : points) {
      const auto base = eval_lift(*source, x, y, kEvalBound);
      o.require(base.value != 0.0, "non-trivial value");
      for (const auto& v : shifts) {
        std::array<double, 4> xv;
        for (int i = 0; i < 4; ++i) xv[i] = x[i] + v[i];
        worst = std::max(worst, std::abs(eval_lift(*source, xv, y, kEvalBound).value - base.value));
      }
      for (const auto& u : units()) {
        // x -> u x, so Re(beta u x) = Re((beta u) x) permutes the sum.
        const double a0 = u[0] / 2.0, a1 = u[1] / 2.0, a2 = u[2] / 2.0, a3 = u[3] / 2.0;
        const std::array<double, 4> ux{a0 * x[0] - a1 * x[1] - a2 * x[2] - a3 * x[3], a0 * x[1] + a1 * x[0] + a2 * x[3] - a3 * x[2],
                                       a0 * x[2] - a1 * x[3] + a2 * x[0] + a3 * x[1], a0 * x[3] + a1 * x[2] - a2 * x[1] + a3 * x[0]};
        worst = std::max(worst, std::abs(eval_lift(*source, ux, y, kEvalBound).value - base.value));
      }
    }
    double worst_k = 0;
    for (double r : {0.0, 0.5, 1.0, 4.0, 10.0})
      for (double yy : {0.2, 0.8, 2.0, 6.0, 20.0})
        worst_k = std::max(worst_k, std::abs(bessel_k_imag(r, yy) - static_cast<double>(oracle::bessel_k_trapezoid(r, yy))));
    o.note << "invariance error " << worst << " <= " << kEvalTol << ", Bessel error " << worst_k << " <= " << kBesselTol << "; ";
    o.require(worst <= kEvalTol, "invariance");
    o.require(worst_k <= kBesselTol, "Bessel oracle");
  });

  criterion(10, "non-vanishing witness A(varpi beta0) = sqrt(2 N0) c(-N0)", [](Outcome& o) {
    for (std::uint64_t n0 : {1u, 2u, 3u, 5u}) {
      HeckeSourceConfig cfg;
      for (std::uint64_t m = 1; m < n0; ++m) cfg.seeds[m] = SymbolicValue();
      HeckeGeneratedSource source(cfg);
      const SymbolicValue expected = sym_coeff(n0) * AlgebraicReal::sqrt_of(2 * n0);
      const auto betas = oracle::o_sphere(static_cast<std::int64_t>(n0));
      o.require(!betas.empty(), "beta0 exists");
      for (const auto& beta0 : betas)
        o.require(lift_coeff(source, HurwitzQuaternion::varpi() * beta0) == expected, "N0=" + std::to_string(n0));
    }
  });

  std::printf("acceptance: %s (%d failing)\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
