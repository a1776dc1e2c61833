#include "qll/lift/hecke_action.hpp"

#include "qll/hecke/norm_classes.hpp"
#include "qll/number/arith.hpp"
#include "qll/util/errors.hpp"

namespace qll {

namespace {

using HQ = HurwitzQuaternion;

void add(HeckeWeights& w, const std::optional<HQ>& x, std::int64_t weight) {
  if (!x) return;
  if (auto key = lift_key(*x)) {
    auto& slot = w[*key];
    slot += weight;
    if (slot == 0) w.erase(*key);
  }
}

}  // namespace

void HeckeOperatorId::validate() const {
  if (p == 2) {
    if (shape != HeckeShape::two) throw ConfigError("p = 2 takes only the varpi operator");
    return;
  }
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (shape == HeckeShape::two) throw ConfigError("odd p needs shape a, b or c");
}

std::string HeckeOperatorId::to_string() const {
  switch (shape) {
    case HeckeShape::two:
      return "T(2)";
    case HeckeShape::a:
      return "T(" + std::to_string(p) + ",a)";
    case HeckeShape::b:
      return "T(" + std::to_string(p) + ",b)";
    case HeckeShape::c:
      return "T(" + std::to_string(p) + ",c)";
  }
  return "?";
}

HeckeShape parse_hecke_shape(const std::string& text) {
  if (text == "a") return HeckeShape::a;
  if (text == "b") return HeckeShape::b;
  if (text == "c") return HeckeShape::c;
  if (text == "2" || text == "two" || text == "even") return HeckeShape::two;
  throw ConfigError("unknown Hecke shape '" + text + "'");
}

HeckeWeights hecke_weights(const HeckeOperatorId& op, const HurwitzQuaternion& beta) {
  if (op.p == 2) return hecke_weights(op, beta, {});
  return hecke_weights(op, beta, enumerate_cp(op.p).representatives);
}

HeckeWeights hecke_weights(const HeckeOperatorId& op, const HurwitzQuaternion& beta,
                           const std::vector<HurwitzQuaternion>& reps) {
  op.validate();
  HeckeWeights w;
  const std::int64_t p = op.p;
  switch (op.shape) {
    case HeckeShape::two:
      add(w, divide_by_varpi_right(beta), 2);
      add(w, beta * HQ::varpi(), 2);
      break;
    case HeckeShape::a:
      // conj(alpha)^-1 = alpha / p.
      for (const auto& alpha : reps) {
        add(w, (beta * alpha).divided_by(p), p);
        add(w, alpha.conj() * beta, p);
      }
      break;
    case HeckeShape::b:
      // alpha^-1 = conj(alpha) / p.
      for (const auto& alpha : reps) {
        add(w, (alpha.conj() * beta).divided_by(p), p);
        add(w, beta * alpha, p);
      }
      break;
    case HeckeShape::c:
      add(w, beta.divided_by(p), p * p);
      add(w, beta.scaled(p), p * p);
      for (const auto& a1 : reps) {
        const HQ left = a1.conj() * beta;
        for (const auto& a2 : reps) add(w, (left * a2).divided_by(p), p);
      }
      break;
  }
  return w;
}

SymbolicValue combine(const LiftEvaluator& lift, const HeckeWeights& weights) {
  SymbolicValue out;
  for (const auto& [key, weight] : weights) out += lift.exact(key) * AlgebraicReal(Rational(static_cast<long>(weight)));
  return out;
}

SymbolicValue hecke_apply(const HeckeOperatorId& op, const LiftEvaluator& lift, const HurwitzQuaternion& beta) {
  return combine(lift, hecke_weights(op, beta));
}

SymbolicValue hecke_eigenvalue(const HeckeOperatorId& op, const SymbolicValue& eps, const SymbolicValue& lambda_p) {
  op.validate();
  const auto p = static_cast<long>(op.p);
  switch (op.shape) {
    case HeckeShape::two:
      return eps * AlgebraicReal::radical(2, Rational(-3));
    case HeckeShape::a:
    case HeckeShape::b:
      return lambda_p * AlgebraicReal(Rational(p * (p + 1)));
    case HeckeShape::c:
      return lambda_p * lambda_p * AlgebraicReal(Rational(p * p)) + SymbolicValue(p * p * p + p);
  }
  return {};
}

}  // namespace qll
