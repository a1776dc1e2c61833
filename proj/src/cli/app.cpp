#include "qll/cli/app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <complex>
#include <functional>
#include <optional>

#include "qll/cli/suites.hpp"
#include "qll/hecke/norm_classes.hpp"
#include "qll/lattice/lattice_s.hpp"
#include "qll/lift/lift.hpp"
#include "qll/number/arith.hpp"
#include "qll/satake/satake.hpp"
#include "qll/theta/eval_lift.hpp"
#include "qll/theta/theta.hpp"
#include "qll/util/errors.hpp"

namespace qll {

namespace {

std::optional<int> parse_epsilon(const std::string& text) {
  if (text.empty() || text == "sym" || text == "symbolic") return std::nullopt;
  if (text == "1" || text == "+1") return 1;
  if (text == "-1") return -1;
  throw ConfigError("--epsilon must be +1, -1 or symbolic, got '" + text + "'");
}

int require_sign(const std::string& text) {
  const auto e = parse_epsilon(text);
  if (!e) throw ConfigError("--epsilon must be +1 or -1 here");
  return *e;
}

HurwitzQuaternion parse_beta(const std::string& text) {
  try {
    return parse_hurwitz(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--beta: ") + e.what());
  }
}

std::complex<double> parse_complex(const std::string& text) {
  Quaternion q;
  try {
    q = parse_quaternion(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--z: ") + e.what());
  }
  if (!is_zero(q.coords()[2]) || !is_zero(q.coords()[3])) throw ConfigError("--z must be of the form X+Yi");
  return {to_double(q.coords()[0]), to_double(q.coords()[1])};
}

const HarmonicPolynomial& pick_harmonic(unsigned l, std::size_t nu) {
  const auto& basis = harmonic_basis(l);
  if (nu >= basis.size())
    throw ConfigError("--nu must be below " + std::to_string(basis.size()) + " for l = " + std::to_string(l));
  return basis[nu];
}

nlohmann::json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

Report satake_report(const SatakeParams& params) {
  Report r;
  r.suite = "satake";
  r.parameters["p"] = params.p;
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json moduli = nlohmann::json::array();
  for (const auto& v : params.values) {
    values.push_back(complex_json(v));
    moduli.push_back(std::abs(v));
  }
  r.results["values"] = values;
  r.results["moduli"] = moduli;
  if (!params.exact.empty()) {
    nlohmann::json exact = nlohmann::json::array();
    for (const auto& v : params.exact) exact.push_back(to_json(v));
    r.results["exact"] = exact;
  }
  if (!params.symbolic.empty()) r.results["symbolic"] = params.symbolic;
  r.results["tempered"] = to_string(params.tempered);
  if (!params.note.empty()) r.results["note"] = params.note;
  return r;
}

Report config_error_report(const std::string& message) {
  Report r;
  r.suite = "error";
  r.status = Status::config_error;
  r.results["error"] = message;
  return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lifting toolkit for Maass forms on the discriminant-2 quaternion algebra", "qll"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  std::string format_name = "json";
  bool timing = false;
  app.add_option("--format", format_name, "Output format: json, csv or text");
  app.add_flag("--timing", timing, "Include wall-clock timings in reports");

  std::function<Report()> action;
  std::function<void()> raw_action;

  // cp
  auto* cp = app.add_subcommand("cp", "Norm-p classes C_p");
  cp->require_subcommand(1);
  auto* cp_enum = cp->add_subcommand("enumerate", "List C_p representatives");
  std::int64_t cp_p = 0;
  bool cp_left = false;
  cp_enum->add_option("-p,--p", cp_p, "Odd prime")->required();
  cp_enum->add_flag("--left", cp_left, "Quotient by units on the left");
  cp_enum->callback([&] {
    action = [&] {
      const NormPClasses classes = cp_left ? enumerate_cp_left(cp_p) : enumerate_cp(cp_p);
      Report r;
      r.suite = "cp enumerate";
      r.parameters = {{"p", cp_p}, {"side", cp_left ? "left" : "right"}};
      r.results = {{"classes", classes.representatives.size()}, {"raw_count", classes.raw_count}};
      Table t{{"index", "t0", "t1", "t2", "t3", "orbit_size"}, {}};
      for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
        const auto& a = classes.representatives[i];
        t.rows.push_back({std::to_string(i), std::to_string(a[0]), std::to_string(a[1]), std::to_string(a[2]),
                          std::to_string(a[3]), std::to_string(classes.orbit_sizes[i])});
      }
      r.table = std::move(t);
      const auto expected = static_cast<std::size_t>(cp_p + 1);
      if (classes.representatives.size() != expected || classes.raw_count != 24 * expected) {
        r.status = Status::fail;
        r.witnesses.push_back({{"expected_classes", expected}, {"classes", classes.representatives.size()}});
      }
      return r;
    };
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "The lattice S = varpi_2 O");
  lattice->require_subcommand(1);
  std::string lat_beta;
  std::int64_t lat_norm = 0;
  bool lat_order = false;
  auto* lat_member = lattice->add_subcommand("member", "Membership of beta in O and S");
  lat_member->add_option("--beta", lat_beta, "Quaternion a+bi+cj+dk")->required();
  lat_member->callback([&] {
    action = [&] {
      Report r;
      r.suite = "lattice member";
      const Quaternion q = [&] {
        try {
          return parse_quaternion(lat_beta);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(std::string("--beta: ") + e.what());
        }
      }();
      r.parameters["beta"] = q.to_string();
      const auto h = q.to_hurwitz();
      const bool in_o = h && h->in_order();
      r.results = {{"in_O", in_o}, {"in_S", in_o && s_membership(*h)}, {"norm", to_string(q.norm())}};
      return r;
    };
  });
  auto* lat_dec = lattice->add_subcommand("decompose", "beta = varpi_2^u d varpi_2 beta0");
  lat_dec->add_option("--beta", lat_beta, "Element of S")->required();
  lat_dec->callback([&] {
    action = [&] {
      const auto beta = parse_beta(lat_beta);
      if (beta.is_zero() || !s_membership(beta)) throw ConfigError("--beta must be a nonzero element of S");
      const auto dec = primitive_decompose(beta);
      Report r;
      r.suite = "lattice decompose";
      r.parameters["beta"] = to_json(beta);
      r.results = {{"u", dec.u}, {"d", dec.d}, {"beta0", to_json(dec.beta0)}, {"primitive", is_primitive(beta)}};
      return r;
    };
  });
  auto* lat_enum = lattice->add_subcommand("enumerate", "Elements of S (or O) of a given norm");
  lat_enum->add_option("--norm", lat_norm, "Reduced norm")->required();
  lat_enum->add_flag("--order", lat_order, "Enumerate O instead of S");
  lat_enum->callback([&] {
    action = [&] {
      if (lat_norm < 0) throw ConfigError("--norm must be non-negative");
      const auto& shell = lat_order ? enumerate_o_by_norm(lat_norm) : enumerate_by_norm(lat_norm);
      Report r;
      r.suite = "lattice enumerate";
      r.parameters = {{"norm", lat_norm}, {"lattice", lat_order ? "O" : "S"}};
      r.results["count"] = shell.size();
      Table t{{"t0", "t1", "t2", "t3"}, {}};
      for (const auto& x : shell)
        t.rows.push_back({std::to_string(x[0]), std::to_string(x[1]), std::to_string(x[2]), std::to_string(x[3])});
      r.table = std::move(t);
      return r;
    };
  });
  auto* lat_check = lattice->add_subcommand("check", "Verify S = varpi_2 O");
  lat_check->callback([&] {
    action = [&] {
      Report r;
      r.suite = "lattice check";
      const bool ok = verify_s_equals_w2O();
      r.results["s_equals_varpi_o"] = ok;
      if (!ok) {
        r.status = Status::fail;
        r.witnesses.push_back({{"check", "S = varpi_2 O"}});
      }
      return r;
    };
  });

  // lift
  auto* lift = app.add_subcommand("lift", "Lift coefficients A(beta)");
  lift->alias("l");
  lift->require_subcommand(1);
  std::string lift_beta, lift_eps, lift_file;
  std::vector<std::uint64_t> lift_active;
  auto* lift_coeff_cmd = lift->add_subcommand("coeff", "A(beta) for beta in S");
  lift_coeff_cmd->add_option("--beta", lift_beta, "Element of S")->required();
  lift_coeff_cmd->add_option("--epsilon", lift_eps, "+1, -1 or symbolic");
  lift_coeff_cmd->add_option("--active", lift_active, "Primes generated by recursion (default: 2)")->delimiter(',');
  lift_coeff_cmd->add_option("--coeffs", lift_file, "Coefficient file (overrides the symbolic source)");
  lift_coeff_cmd->callback([&] {
    action = [&] {
      const auto beta = parse_beta(lift_beta);
      Report r;
      r.suite = "lift coeff";
      r.parameters["beta"] = to_json(beta);
      const auto key = lift_key(beta);
      if (!key) throw ConfigError("--beta must be a nonzero element of S");
      r.results["key"] = {{"nu", key->nu}, {"u", key->u}, {"d", key->d}};
      if (!lift_file.empty()) {
        const auto source = make_source(load_coefficient_file(lift_file));
        const LiftEvaluator ev(*source);
        r.parameters["coeffs"] = lift_file;
        r.results["numeric"] = ev.numeric(*key);
        try {
          r.results["value"] = to_json(ev.exact(*key));
        } catch (const std::domain_error&) {
        }
      } else {
        HeckeSourceConfig cfg;
        if (lift_active.empty()) lift_active = {2};
        for (auto p : lift_active) {
          if (!is_prime(p)) throw ConfigError("--active entries must be primes");
          cfg.active_primes.insert(p);
        }
        cfg.epsilon = parse_epsilon(lift_eps);
        r.parameters["active"] = lift_active;
        r.parameters["epsilon"] = cfg.epsilon ? std::to_string(*cfg.epsilon) : "symbolic";
        HeckeGeneratedSource source(cfg);
        r.results["value"] = to_json(lift_coeff(source, beta));
      }
      return r;
    };
  });

  // theta
  auto* theta = app.add_subcommand("theta", "Harmonic theta series");
  theta->require_subcommand(1);
  unsigned th_l = 0;
  std::size_t th_nu = 0;
  std::int64_t th_max = 10;
  std::string th_z;
  double th_tol = 1e-8;
  int th_sign = -1;
  auto* th_basis = theta->add_subcommand("basis", "Eigenbasis of degree-l harmonic polynomials");
  th_basis->add_option("--l", th_l, "Even degree")->required();
  th_basis->callback([&] {
    action = [&] {
      Report r;
      r.suite = "theta basis";
      r.parameters["l"] = th_l;
      const auto& basis = harmonic_basis(th_l);
      r.results["dimension"] = basis.size();
      Table t{{"nu", "eigen_index", "eigenvalue", "polynomial"}, {}};
      for (const auto& p : basis)
        t.rows.push_back({std::to_string(p.nu), std::to_string(p.eigen_index), p.eigenvalue.to_string(), p.to_string()});
      r.table = std::move(t);
      return r;
    };
  });
  auto* th_coeffs = theta->add_subcommand("coeffs", "Coefficients b(2m), 0 <= m <= max");
  th_coeffs->add_option("--l", th_l, "Even degree")->required();
  th_coeffs->add_option("--nu", th_nu, "Basis index")->required();
  th_coeffs->add_option("--max", th_max, "Largest m")->required();
  th_coeffs->callback([&] {
    action = [&] {
      const auto& p = pick_harmonic(th_l, th_nu);
      if (th_max < 0) throw ConfigError("--max must be non-negative");
      Report r;
      r.suite = "theta coeffs";
      r.parameters = {{"l", th_l}, {"nu", th_nu}, {"max", th_max}};
      r.results["eigenvalue"] = p.eigenvalue.to_string();
      Table t{{"m", "b(2m)"}, {}};
      const auto b = theta_coeffs(p, th_max);
      for (std::size_t m = 0; m < b.size(); ++m) t.rows.push_back({std::to_string(m), b[m].to_string()});
      r.table = std::move(t);
      return r;
    };
  });
  auto* th_transform = theta->add_subcommand("check-transform", "Numeric Fricke and Gamma0(2) checks");
  th_transform->add_option("--l", th_l, "Even degree")->required();
  th_transform->add_option("--nu", th_nu, "Basis index");
  th_transform->add_option("--z", th_z, "Point X+Yi with Y > 0")->required();
  th_transform->add_option("--tol", th_tol, "Tolerance");
  th_transform->add_option("--sign", th_sign, "Sign in the Fricke law (-1 is correct)");
  th_transform->add_option("--max", th_max, "Truncation (0 = automatic)");
  th_transform->callback([&] {
    if (th_transform->count("--max") == 0) th_max = 0;
    action = [&] {
      const auto& p = pick_harmonic(th_l, th_nu);
      const auto z = parse_complex(th_z);
      if (z.imag() <= 0) throw ConfigError("--z must have positive imaginary part");
      if (th_sign != 1 && th_sign != -1) throw ConfigError("--sign must be +1 or -1");
      const auto rep = verify_transformation(p, z, th_tol, th_max, th_sign);
      Report r;
      r.suite = "theta check-transform";
      r.parameters = {{"l", th_l}, {"nu", th_nu}, {"z", complex_json(z)}, {"tol", th_tol}, {"sign", th_sign}};
      r.results["truncation"] = rep.truncation;
      for (const auto& c : rep.checks) {
        r.results[c.name] = {{"error", c.error}, {"tail", c.tail}, {"verdict", to_string(c.verdict)}};
        if (c.verdict == Verdict::fail) r.witnesses.push_back({{"check", c.name}, {"error", c.error}});
      }
      const auto v = rep.verdict();
      r.status = v == Verdict::pass ? Status::pass : v == Verdict::fail ? Status::fail : Status::inconclusive;
      return r;
    };
  });
  auto* th_os = theta->add_subcommand("os-identity", "Exact O-vs-S coefficient identity");
  th_os->add_option("--l", th_l, "Even degree")->required();
  th_os->add_option("--max", th_max, "Largest m");
  th_os->callback([&] {
    action = [&] {
      Report r;
      r.suite = "theta os-identity";
      r.parameters = {{"l", th_l}, {"max", th_max}};
      for (const auto& p : harmonic_basis(th_l)) {
        const auto res = verify_o_s_identity(p, th_max);
        if (!res.holds) {
          r.status = Status::fail;
          r.witnesses.push_back({{"nu", p.nu}, {"m", res.first_mismatch}});
        }
      }
      r.results["polynomials"] = harmonic_basis(th_l).size();
      return r;
    };
  });

  // satake / capmatch
  auto* satake = app.add_subcommand("satake", "Local Satake parameters");
  std::uint64_t sat_p = 0;
  double sat_lambda = 0.0;
  bool sat_symbolic = false;
  std::string sat_eps;
  satake->add_option("--p", sat_p, "Prime")->required();
  auto* sat_lambda_opt = satake->add_option("--lambda", sat_lambda, "Hecke eigenvalue lambda_p");
  satake->add_flag("--symbolic", sat_symbolic, "Keep lambda_p formal");
  satake->add_option("--epsilon", sat_eps, "Atkin-Lehner sign for p = 2");
  satake->callback([&] {
    action = [&] {
      if (sat_p == 2) {
        auto r = satake_report(satake_two(require_sign(sat_eps)));
        r.parameters["epsilon"] = require_sign(sat_eps);
        return r;
      }
      if (sat_symbolic) return satake_report(satake_odd_symbolic(sat_p));
      if (sat_lambda_opt->count() == 0) throw ConfigError("--lambda is required for odd p unless --symbolic");
      auto r = satake_report(satake_odd(sat_p, sat_lambda));
      r.parameters["lambda"] = sat_lambda;
      r.results["cap_match"] = cap_match(sat_p, sat_lambda).match;
      return r;
    };
  });
  auto* capmatch = app.add_subcommand("capmatch", "Compare Satake parameters with the induced data");
  capmatch->add_option("--p", sat_p, "Odd prime")->required();
  capmatch->add_option("--lambda", sat_lambda, "Hecke eigenvalue")->required();
  capmatch->callback([&] {
    action = [&] {
      const auto cm = cap_match(sat_p, sat_lambda);
      Report r;
      r.suite = "capmatch";
      r.parameters = {{"p", sat_p}, {"lambda", sat_lambda}};
      nlohmann::json induced = nlohmann::json::array(), sat = nlohmann::json::array();
      for (const auto& v : cm.induced) induced.push_back(complex_json(v));
      for (const auto& v : cm.satake) sat.push_back(complex_json(v));
      r.results = {{"eta0", complex_json(cm.eta0)}, {"induced", induced}, {"satake", sat}, {"cap_match", cm.match}};
      if (!cm.match) {
        r.status = Status::fail;
        r.witnesses.push_back({{"lambda", sat_lambda}});
      }
      return r;
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate the lifted form numerically");
  std::string ev_x, ev_file;
  double ev_y = 1.0;
  std::int64_t ev_bound = 200;
  eval->add_option("--x", ev_x, "Quaternion x")->required();
  eval->add_option("--y", ev_y, "Height y > 0")->required();
  eval->add_option("--bound", ev_bound, "Norm bound");
  eval->add_option("--coeffs", ev_file, "Coefficient file")->required();
  eval->callback([&] {
    action = [&] {
      Quaternion q;
      try {
        q = parse_quaternion(ev_x);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--x: ") + e.what());
      }
      if (!(ev_y > 0)) throw ConfigError("--y must be positive");
      const auto source = make_source(load_coefficient_file(ev_file));
      const std::array<double, 4> x{to_double(q.coords()[0]), to_double(q.coords()[1]), to_double(q.coords()[2]), to_double(q.coords()[3])};
      const auto v = eval_lift(*source, x, ev_y, ev_bound);
      Report r;
      r.suite = "eval";
      r.parameters = {{"x", q.to_string()}, {"y", ev_y}, {"bound", ev_bound}, {"coeffs", ev_file}};
      r.results = {{"value", v.value}, {"tail_bound", v.tail_bound}, {"terms", v.terms}};
      return r;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  SuiteOptions opts;
  std::uint64_t v_seed = kDefaultSeed;
  std::int64_t v_p = 3, v_bound = 240, v_n = 200;
  std::string v_shape, v_eps;
  unsigned v_l = 0;
  std::size_t v_nu = 0;
  std::vector<std::int64_t> v_primes;
  auto* v_all = verify->add_subcommand("all", "Every suite");
  v_all->add_flag("--quick", opts.quick, "Reduced bounds");
  v_all->add_option("--seed", v_seed, "Random seed");
  v_all->callback([&] {
    action = [&] {
      opts.seed = v_seed;
      opts.timing = timing;
      return run_all(opts);
    };
  });
  auto* v_eq = verify->add_subcommand("equivariance", "Exact Hecke equivariance");
  v_eq->add_option("--p", v_p, "Prime")->required();
  v_eq->add_option("--shape", v_shape, "a, b or c for odd p");
  v_eq->add_option("--bound", v_bound, "Norm bound");
  auto* v_eq_seed = v_eq->add_option("--seed", v_seed, "Bind lambda_p and seeds to seeded rationals");
  v_eq->add_option("--epsilon", v_eps, "+1, -1 or symbolic");
  v_eq->callback([&] {
    action = [&] {
      HeckeOperatorId op;
      op.p = v_p;
      if (v_p == 2) {
        op.shape = HeckeShape::two;
      } else {
        if (v_shape.empty()) throw ConfigError("--shape is required for odd p");
        try {
          op.shape = parse_hecke_shape(v_shape);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
      try {
        op.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      const std::optional<std::uint64_t> seed = v_eq_seed->count() ? std::optional<std::uint64_t>(v_seed) : std::nullopt;
      return run_equivariance(op, parse_epsilon(v_eps), v_bound, seed);
    };
  });
  auto* v_fund = verify->add_subcommand("fundlemma", "Divisibility counts over C_p");
  v_fund->add_option("--p", v_primes, "Odd primes")->delimiter(',');
  v_fund->add_option("--bound", v_bound, "Norm bound");
  v_fund->callback([&] {
    if (v_fund->count("--bound") == 0) v_bound = 400;
    action = [&] {
      if (v_primes.empty()) v_primes = {3, 5, 7};
      for (auto p : v_primes)
        if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw ConfigError("--p entries must be odd primes");
      return run_fundlemma(v_primes, v_bound);
    };
  });
  auto* v_cp = verify->add_subcommand("cp", "#C_p = p + 1");
  v_cp->add_option("--p", v_primes, "Odd primes")->delimiter(',');
  v_cp->callback([&] {
    action = [&] {
      if (v_primes.empty()) v_primes = {3, 5, 7, 11, 13};
      return run_cp(v_primes);
    };
  });
  verify->add_subcommand("cosets", "Coset counts")->callback([&] { action = [] { return run_cosets(); }; });
  auto* v_struct = verify->add_subcommand("structure", "Lattice identity and generator round trips");
  v_struct->add_option("--seed", v_seed, "Random seed");
  v_struct->callback([&] { action = [&] { return run_structure(v_seed); }; });
  auto* v_dir = verify->add_subcommand("dirichlet", "Formal Dirichlet-series identity");
  v_dir->add_option("--l", v_l, "Even degree")->required();
  auto* v_dir_nu = v_dir->add_option("--nu", v_nu, "Basis index (default: all)");
  v_dir->add_option("--N", v_n, "Index bound");
  v_dir->callback([&] {
    action = [&] {
      if (v_dir_nu->count()) pick_harmonic(v_l, v_nu);
      return run_dirichlet(v_l, v_n, v_dir_nu->count() ? std::optional<std::size_t>(v_nu) : std::nullopt);
    };
  });
  auto* v_theta = verify->add_subcommand("theta", "O-vs-S identity and transformation laws");
  v_theta->add_option("--max", v_n, "Bound for the O-vs-S identity");
  v_theta->add_option("--tol", th_tol, "Tolerance of the numeric checks");
  v_theta->callback([&] {
    if (v_theta->count("--max") == 0) v_n = 30;
    action = [&] { return run_theta(v_n, th_tol); };
  });
  auto* v_sat = verify->add_subcommand("satake", "Satake consistency and CAP matching");
  v_sat->add_option("--seed", v_seed, "Random seed");
  v_sat->callback([&] { action = [&] { return run_satake(v_seed); }; });
  auto* v_lift = verify->add_subcommand("lift-eval", "Bessel checks and invariance of the lifted form");
  v_lift->add_option("--seed", v_seed, "Random seed");
  v_lift->add_option("--bound", v_bound, "Norm bound");
  v_lift->callback([&] {
    if (v_lift->count("--bound") == 0) v_bound = 400;
    action = [&] { return run_lift_eval(v_seed, v_bound); };
  });
  verify->add_subcommand("nonvanishing", "A(varpi_2 beta0) at the first nonzero coefficient")->callback([&] {
    action = [] { return run_nonvanishing(); };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic inputs");
  gen->require_subcommand(1);
  auto* gen_coeffs = gen->add_subcommand("coeffs", "Synthetic coefficient file");
  std::size_t gen_count = 10;
  double gen_r = 1.0;
  std::string gen_eps = "1", gen_out;
  gen_coeffs->add_option("--count", gen_count, "Number of coefficients c(-1..-count)");
  gen_coeffs->add_option("--seed", v_seed, "Random seed");
  gen_coeffs->add_option("--r", gen_r, "Spectral parameter");
  gen_coeffs->add_option("--epsilon", gen_eps, "Atkin-Lehner sign");
  gen_coeffs->add_option("--out", gen_out, "Write to this file instead of stdout");
  gen_coeffs->callback([&] {
    raw_action = [&] {
      const auto file = synthetic_coefficients(gen_count, v_seed, gen_r, require_sign(gen_eps));
      if (gen_out.empty())
        out << serialize_coefficient_file(file);
      else
        save_coefficient_file(gen_out, file);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  Format format = Format::json;
  try {
    format = parse_format(format_name);
    if (raw_action) {
      raw_action();
      return 0;
    }
    if (!action) throw ConfigError("no command given");
    const auto t0 = std::chrono::steady_clock::now();
    Report report = action();
    if (timing && !report.timing_seconds)
      report.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << emit_report(report, format);
    return exit_code(report.status);
  } catch (const std::invalid_argument& e) {
    // ConfigError and argument-domain errors from the library alike.
    err << "error: " << e.what() << "\n";
    if (format != Format::csv) out << emit_report(config_error_report(e.what()), format);
    return 2;
  }
}

}  // namespace qll
