#include "qll/lift/equivariance.hpp"

#include <map>
#include <mutex>

#include "qll/util/errors.hpp"
#include "qll/util/parallel.hpp"

namespace qll {

std::vector<HurwitzQuaternion> s_ball(std::int64_t norm_bound) {
  std::vector<HurwitzQuaternion> out;
  for (std::int64_t n = 2; n <= norm_bound; n += 2) {
    const auto& shell = enumerate_by_norm(n);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

EquivarianceReport verify_equivariance(const HeckeOperatorId& op, const CoefficientSource& source,
                                       std::int64_t norm_bound, std::size_t max_witnesses) {
  op.validate();
  if (norm_bound < 2) throw ConfigError("norm bound must be at least 2");
  if (!source.satisfies_recursion(static_cast<std::uint64_t>(op.p)))
    throw ConfigError("coefficient source does not satisfy the Hecke relation at p = " + std::to_string(op.p));

  SymbolicValue lambda_p;
  if (op.p != 2) {
    const auto* generated = dynamic_cast<const HeckeGeneratedSource*>(&source);
    if (!generated) throw ConfigError("odd-p equivariance needs a Hecke-generated source");
    lambda_p = generated->lambda(static_cast<std::uint64_t>(op.p));
  }

  EquivarianceReport report;
  report.op = op;
  report.norm_bound = norm_bound;
  report.eigenvalue = hecke_eigenvalue(op, source.epsilon(), lambda_p);

  const LiftEvaluator lift(source);
  const auto betas = s_ball(norm_bound);
  report.checked = betas.size();

  // Many beta share the same weights and key; the symbolic comparison runs once per class.
  using Signature = std::pair<HeckeWeights, LiftKey>;
  std::map<Signature, SymbolicValue> verdicts;
  std::mutex mutex;
  std::vector<std::optional<SymbolicValue>> failures(betas.size());

  parallel_for(betas.size(), [&](std::size_t idx) {
    const auto& beta = betas[idx];
    Signature sig{hecke_weights(op, beta), *lift_key(beta)};
    {
      std::lock_guard lock(mutex);
      auto it = verdicts.find(sig);
      if (it != verdicts.end()) {
        if (!it->second.is_zero()) failures[idx] = it->second;
        return;
      }
    }
    SymbolicValue diff = combine(lift, sig.first) - report.eigenvalue * lift.exact(sig.second);
    std::lock_guard lock(mutex);
    if (!diff.is_zero()) failures[idx] = diff;
    verdicts.try_emplace(std::move(sig), std::move(diff));
  });

  report.distinct_classes = verdicts.size();
  for (std::size_t idx = 0; idx < betas.size(); ++idx) {
    if (!failures[idx]) continue;
    ++report.violation_count;
    if (report.witnesses.size() < max_witnesses) report.witnesses.push_back({betas[idx], *failures[idx]});
  }
  return report;
}

}  // namespace qll
