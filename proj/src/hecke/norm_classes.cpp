#include "qll/hecke/norm_classes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "qll/lattice/lattice_s.hpp"
#include "qll/number/arith.hpp"
#include "qll/util/parallel.hpp"

namespace qll {

namespace {

using HQ = HurwitzQuaternion;

void require_odd_prime(std::int64_t p) {
  if (p <= 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
}

NormPClasses build_classes(std::int64_t p, UnitSide side) {
  require_odd_prime(p);
  NormPClasses out;
  out.p = p;
  out.side = side;
  const auto& elements = enumerate_o_by_norm(p);
  out.raw_count = elements.size();
  std::set<HQ> seen;
  for (const auto& alpha : elements) {
    if (seen.count(alpha)) continue;
    std::set<HQ> orbit;
    for (const auto& u : units()) orbit.insert(side == UnitSide::right ? alpha * u : u * alpha);
    seen.insert(orbit.begin(), orbit.end());
    out.representatives.push_back(*orbit.begin());
    out.orbit_sizes.push_back(orbit.size());
  }
  std::vector<std::size_t> order(out.representatives.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.representatives[a] < out.representatives[b]; });
  NormPClasses sorted = out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.representatives[i] = out.representatives[order[i]];
    sorted.orbit_sizes[i] = out.orbit_sizes[order[i]];
  }
  return sorted;
}

}  // namespace

const NormPClasses& enumerate_cp(std::int64_t p) {
  require_odd_prime(p);
  static std::mutex mutex;
  static std::map<std::int64_t, NormPClasses> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_classes(p, UnitSide::right)).first;
  return it->second;
}

NormPClasses enumerate_cp_left(std::int64_t p) { return build_classes(p, UnitSide::left); }

bool divides(std::int64_t p, const HurwitzQuaternion& gamma) { return gamma.divided_in_order(p).has_value(); }

DivisibilityCount divisibility_count(const HurwitzQuaternion& beta, std::int64_t p, UnitSide side) {
  require_odd_prime(p);
  if (!is_primitive(beta)) throw std::invalid_argument("divisibility_count: " + beta.to_string() + " is not primitive");
  DivisibilityCount out;
  for (const auto& alpha : enumerate_cp(p).representatives) {
    const HQ prod = side == UnitSide::right ? beta * alpha : alpha * beta;
    if (divides(p, prod)) ++out.count;
    if (divides(p * p, prod)) out.square_divides = true;
  }
  return out;
}

std::int64_t count_hyperplanes(std::int64_t p) {
  // Nonzero functionals on F_p^4 up to scaling: normalize the first nonzero entry to 1.
  std::int64_t count = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          const std::int64_t v[4] = {a, b, c, d};
          int lead = 0;
          while (lead < 4 && v[lead] == 0) ++lead;
          if (lead < 4 && v[lead] == 1) ++count;
        }
  return count;
}

std::int64_t count_planes(std::int64_t p) {
  // Each plane has exactly one basis in reduced row echelon form; count those 2x4 matrices.
  std::int64_t count = 0;
  std::int64_t total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t m[2][4];
    std::int64_t c = code;
    for (auto& row : m)
      for (auto& x : row) {
        x = c % p;
        c /= p;
      }
    int pivot[2];
    bool ok = true;
    for (int r = 0; r < 2 && ok; ++r) {
      int col = 0;
      while (col < 4 && m[r][col] == 0) ++col;
      if (col == 4 || m[r][col] != 1) ok = false;
      pivot[r] = col;
    }
    if (!ok || pivot[0] >= pivot[1]) continue;
    if (m[0][pivot[1]] != 0) continue;
    ++count;
  }
  return count;
}

std::int64_t gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t p) {
  std::int64_t num = 1;
  std::int64_t den = 1;
  auto ipow = [](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  for (std::int64_t i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

CosetCounts coset_counts(CosetType type, std::int64_t p) {
  CosetCounts out;
  switch (type) {
    case CosetType::odd_a:
    case CosetType::odd_b:
      require_odd_prime(p);
      out.from_lemma = p * p * p + p + p * p + 1;
      out.oracle = count_hyperplanes(p);
      break;
    case CosetType::odd_c:
      require_odd_prime(p);
      out.from_lemma = p * p * p * p + p * p + p + p * p * p + p * p + 1;
      out.oracle = count_planes(p);
      break;
    case CosetType::even: {
      if (p != 2) throw std::invalid_argument("even coset type requires p = 2");
      const Integer residues = basis_determinant(varpi_times_o_basis(true)) / basis_determinant(o_basis());
      const auto n = HQ::varpi().norm_int();
      out.from_lemma = n * n + 1;
      out.oracle = residues.get_si() + 1;
      break;
    }
  }
  return out;
}

CosetType parse_coset_type(const std::string& text) {
  if (text == "odd-a" || text == "a") return CosetType::odd_a;
  if (text == "odd-b" || text == "b") return CosetType::odd_b;
  if (text == "odd-c" || text == "c") return CosetType::odd_c;
  if (text == "even") return CosetType::even;
  throw std::invalid_argument("unknown coset type '" + text + "'");
}

std::string to_string(CosetType type) {
  switch (type) {
    case CosetType::odd_a:
      return "odd-a";
    case CosetType::odd_b:
      return "odd-b";
    case CosetType::odd_c:
      return "odd-c";
    case CosetType::even:
      return "even";
  }
  return "?";
}

DivisibilitySweep divisibility_sweep(std::int64_t p, std::int64_t norm_bound, std::size_t max_witnesses) {
  DivisibilitySweep out;
  out.p = p;
  out.norm_bound = norm_bound;
  std::vector<HurwitzQuaternion> betas;
  for (std::int64_t n = 2; n <= norm_bound; n += 2)
    for (const auto& beta : enumerate_by_norm(n))
      if (is_primitive(beta)) betas.push_back(beta);
  out.checked = betas.size();

  std::vector<std::vector<DivisibilityWitness>> found(betas.size());
  parallel_for(betas.size(), [&](std::size_t idx) {
    const auto& beta = betas[idx];
    const std::int64_t expected = beta.norm_int() % p == 0 ? 1 : 0;
    for (UnitSide side : {UnitSide::right, UnitSide::left}) {
      const auto r = divisibility_count(beta, p, side);
      if (r.count != expected || r.square_divides) found[idx].push_back({beta, side, r.count, expected, r.square_divides});
    }
  });
  for (const auto& list : found)
    for (const auto& w : list) {
      if (w.count != w.expected) ++out.mismatches;
      if (w.square_divides) ++out.square_hits;
      if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(w);
    }
  return out;
}

}  // namespace qll
