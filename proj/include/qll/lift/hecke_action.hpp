#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qll/lift/lift.hpp"
#include "qll/quaternion/hurwitz.hpp"

namespace qll {

/// Shapes at odd p: a = diag(p,p,p,1), b = diag(p,1,1,1), c = diag(p,p,1,1).
/// `two` is the operator at p = 2.
enum class HeckeShape { two, a, b, c };

struct HeckeOperatorId {
  std::int64_t p = 2;
  HeckeShape shape = HeckeShape::two;

  /// Throws ConfigError when p and shape do not fit together.
  void validate() const;
  std::string to_string() const;
};

HeckeShape parse_hecke_shape(const std::string& text);

/// Integer combination sum_k w_k A(key_k); keys outside S never appear.
using HeckeWeights = std::map<LiftKey, std::int64_t>;

/**
 * The transformed coefficient as a combination of lift keys:
 *   p = 2:  2 (A(beta varpi^-1) + A(beta varpi))
 *   a:      p (sum A(beta conj(alpha)^-1) + sum A(conj(alpha) beta))
 *   b:      p (sum A(alpha^-1 beta) + sum A(beta alpha))
 *   c:      p^2 A(beta / p) + p^2 A(p beta) + p sum A(alpha1^-1 beta alpha2)
 * with alpha running over `reps` (the C_p representatives by default).
 */
HeckeWeights hecke_weights(const HeckeOperatorId& op, const HurwitzQuaternion& beta);
HeckeWeights hecke_weights(const HeckeOperatorId& op, const HurwitzQuaternion& beta,
                           const std::vector<HurwitzQuaternion>& reps);

SymbolicValue combine(const LiftEvaluator& lift, const HeckeWeights& weights);

SymbolicValue hecke_apply(const HeckeOperatorId& op, const LiftEvaluator& lift, const HurwitzQuaternion& beta);

/// -3 sqrt(2) eps for p = 2, p(p+1) lambda_p for shapes a and b, p^2 lambda_p^2 + p^3 + p for c.
SymbolicValue hecke_eigenvalue(const HeckeOperatorId& op, const SymbolicValue& eps, const SymbolicValue& lambda_p);

}  // namespace qll
