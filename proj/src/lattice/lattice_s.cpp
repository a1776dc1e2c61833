#include "qll/lattice/lattice_s.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>

#include "qll/number/arith.hpp"

namespace qll {

namespace {

using HQ = HurwitzQuaternion;
using i128 = __int128;

Matrix<Integer> coordinate_matrix(const LatticeBasis& basis) {
  Matrix<Integer> m(4, std::vector<Integer>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = Integer(static_cast<long>(basis[r][c]));
  return m;
}

// Shells of a lattice sphere family, filled a whole ball at a time.
class ShellCache {
 public:
  explicit ShellCache(bool s_only) : s_only_(s_only) {}

  const std::vector<HQ>& shell(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n <= filled_) return lookup(n);
    }
    std::unique_lock lock(mutex_);
    if (n > filled_) fill(std::max(n, filled_ * 2));
    return lookup(n);
  }

 private:
  const std::vector<HQ>& lookup(std::int64_t n) const {
    static const std::vector<HQ> empty;
    auto it = shells_.find(n);
    return it == shells_.end() ? empty : it->second;
  }

  void fill(std::int64_t max_norm) {
    const std::int64_t from = filled_;
    const std::int64_t limit = 4 * max_norm;
    const auto bound = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(limit)));
    std::map<std::int64_t, std::vector<HQ>> fresh;
    for (std::int64_t a = -bound; a <= bound; ++a) {
      const std::int64_t ra = limit - a * a;
      const auto bb = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(ra)));
      for (std::int64_t b = -bb; b <= bb; ++b) {
        if (((a ^ b) & 1) != 0) continue;
        const std::int64_t rb = ra - b * b;
        const auto bc = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rb)));
        for (std::int64_t c = -bc; c <= bc; ++c) {
          if (((a ^ c) & 1) != 0) continue;
          const std::int64_t rc = rb - c * c;
          const auto bd = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rc)));
          for (std::int64_t d = -bd; d <= bd; ++d) {
            if (((a ^ d) & 1) != 0) continue;
            const std::int64_t n4 = a * a + b * b + c * c + d * d;
            if (n4 == 0 || n4 % 4 != 0) continue;
            const std::int64_t nu = n4 / 4;
            if (nu <= from) continue;
            if (s_only_ && nu % 2 != 0) continue;
            fresh[nu].push_back(HQ::from_doubled({a, b, c, d}));
          }
        }
      }
    }
    for (auto& [nu, list] : fresh) {
      std::sort(list.begin(), list.end());
      shells_.emplace(nu, std::move(list));
    }
    filled_ = max_norm;
  }

  bool s_only_;
  std::shared_mutex mutex_;
  std::int64_t filled_ = 0;
  std::map<std::int64_t, std::vector<HQ>> shells_;
};

ShellCache& s_cache() {
  static ShellCache cache(true);
  return cache;
}

ShellCache& o_cache() {
  static ShellCache cache(false);
  return cache;
}

const HQ kVarpiConj = HQ::from_doubled({2, -2, 0, 0});

}  // namespace

const LatticeBasis& s_basis() {
  static const LatticeBasis basis{HQ::from_doubled({2, 0, 0, -2}), HQ::from_doubled({0, -2, 0, -2}),
                                  HQ::from_doubled({0, 0, -2, -2}), HQ::from_doubled({0, 0, 0, 4})};
  return basis;
}

const LatticeBasis& o_basis() {
  static const LatticeBasis basis{HQ::one(), HQ::i(), HQ::j(), HQ::omega()};
  return basis;
}

Matrix<Integer> basis_hnf(const LatticeBasis& basis) { return hermite_normal_form(coordinate_matrix(basis)); }

Integer basis_determinant(const LatticeBasis& basis) { return abs(determinant(coordinate_matrix(basis))); }

bool same_lattice(const LatticeBasis& x, const LatticeBasis& y) { return basis_hnf(x) == basis_hnf(y); }

LatticeBasis varpi_times_o_basis(bool varpi_on_left) {
  LatticeBasis out;
  for (int r = 0; r < 4; ++r) out[r] = varpi_on_left ? HQ::varpi() * o_basis()[r] : o_basis()[r] * HQ::varpi();
  return out;
}

std::array<Rational, 4> lattice_coordinates(const LatticeBasis& basis, const HurwitzQuaternion& beta) {
  // beta = sum n_r basis[r], i.e. B^T n = beta in doubled coordinates.
  Matrix<Rational> bt(4, std::vector<Rational>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) bt[c][r] = Rational(static_cast<long>(basis[r][c]));
  std::vector<Rational> rhs(4);
  for (int c = 0; c < 4; ++c) rhs[c] = Rational(static_cast<long>(beta[c]));
  std::vector<Rational> x;
  if (!solve_rational(bt, rhs, x)) throw std::invalid_argument("lattice basis is degenerate");
  return {x[0], x[1], x[2], x[3]};
}

namespace {

// Inverse of the S coordinate map as an integer matrix over a common denominator.
struct ScaledInverse {
  std::array<std::array<std::int64_t, 4>, 4> k{};
  std::int64_t den = 1;
};

const ScaledInverse& s_inverse() {
  static const ScaledInverse inv = [] {
    std::array<std::array<Rational, 4>, 4> cols;
    Integer den = 1;
    for (int c = 0; c < 4; ++c) {
      HQ::Coords e{};
      e[c] = 1;
      cols[c] = lattice_coordinates(s_basis(), HQ::from_doubled(e));
      for (const auto& q : cols[c]) den = lcm(den, Integer(q.get_den()));
    }
    ScaledInverse out;
    out.den = den.get_si();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out.k[r][c] = Integer(cols[c][r] * den).get_si();
    return out;
  }();
  return inv;
}

}  // namespace

bool s_membership(const HurwitzQuaternion& beta) {
  const auto& inv = s_inverse();
  for (int r = 0; r < 4; ++r) {
    i128 acc = 0;
    for (int c = 0; c < 4; ++c) acc += static_cast<i128>(inv.k[r][c]) * beta[c];
    if (acc % inv.den != 0) return false;
  }
  return true;
}

bool verify_s_equals_w2O() { return same_lattice(s_basis(), varpi_times_o_basis(true)); }

std::optional<HurwitzQuaternion> divide_by_varpi_left(const HurwitzQuaternion& x) {
  // varpi^-1 = conj(varpi) / 2.
  return (kVarpiConj * x).divided_in_order(2);
}

std::optional<HurwitzQuaternion> divide_by_varpi_right(const HurwitzQuaternion& x) {
  return (x * kVarpiConj).divided_in_order(2);
}

unsigned varpi_valuation(const HurwitzQuaternion& x) {
  if (x.is_zero() || !x.in_order()) throw std::invalid_argument("varpi_valuation: need nonzero element of O");
  unsigned m = 0;
  HQ cur = x;
  while (auto next = divide_by_varpi_left(cur)) {
    cur = *next;
    ++m;
  }
  return m;
}

const std::vector<HurwitzQuaternion>& enumerate_by_norm(std::int64_t n) {
  static const std::vector<HQ> empty;
  if (n <= 0 || n % 2 != 0) return empty;
  return s_cache().shell(n);
}

const std::vector<HurwitzQuaternion>& enumerate_o_by_norm(std::int64_t m) {
  static const std::vector<HQ> empty;
  if (m <= 0) return empty;
  return o_cache().shell(m);
}

std::vector<HurwitzQuaternion> enumerate_by_norm_via_varpi(std::int64_t n) {
  std::vector<HQ> out;
  if (n <= 0 || n % 2 != 0) return out;
  for (const auto& g : enumerate_o_by_norm(n / 2)) out.push_back(HQ::varpi() * g);
  std::sort(out.begin(), out.end());
  return out;
}

PrimitiveDecomposition primitive_decompose(const HurwitzQuaternion& beta) {
  if (beta.is_zero()) throw std::invalid_argument("primitive_decompose: beta must be nonzero");
  if (!beta.in_order() || beta.norm_int() % 2 != 0) throw std::invalid_argument("primitive_decompose: beta not in S");

  std::uint64_t g = 0;
  for (auto t : beta.doubled()) g = std::gcd(g, static_cast<std::uint64_t>(t < 0 ? -t : t));
  PrimitiveDecomposition out;
  out.d = static_cast<std::int64_t>(odd_part(g));
  const auto reduced = beta.divided_in_order(out.d);
  if (!reduced || reduced->norm_int() % 2 != 0) throw std::logic_error("primitive_decompose: odd content left S");

  const unsigned m = varpi_valuation(*reduced);
  const auto nu = static_cast<std::uint64_t>(reduced->norm_int());
  if (m != two_adic_valuation(nu)) throw std::logic_error("primitive_decompose: varpi valuation disagrees with norm");
  out.u = m - 1;
  HQ b0 = *reduced;
  for (unsigned k = 0; k < out.u; ++k) b0 = *divide_by_varpi_left(b0);
  out.beta0 = b0;

  HQ check = b0.scaled(out.d);
  for (unsigned k = 0; k < out.u; ++k) check = HQ::varpi() * check;
  if (check != beta) throw std::logic_error("primitive_decompose: reconstruction mismatch");
  return out;
}

bool is_primitive(const HurwitzQuaternion& beta) {
  if (beta.is_zero() || !beta.in_order()) return false;
  const auto once = divide_by_varpi_left(beta);
  if (!once || divide_by_varpi_left(*once)) return false;
  std::uint64_t g = 0;
  for (auto t : beta.doubled()) g = std::gcd(g, static_cast<std::uint64_t>(t < 0 ? -t : t));
  for (auto [p, e] : factorize(g))
    if (p != 2 && beta.divided_in_order(static_cast<std::int64_t>(p))) return false;
  return true;
}

bool dual_pairing_check(std::int64_t sample_bound) {
  const auto re = [](const HQ& x, const HQ& y) { return (x.to_rational() * y.to_rational()).real_part(); };
  for (const auto& b : s_basis())
    for (const auto& x : o_basis())
      if (!is_integer(re(b, x))) return false;
  for (std::int64_t a = -sample_bound; a <= sample_bound; ++a)
    for (std::int64_t b = -sample_bound; b <= sample_bound; ++b)
      for (std::int64_t c = -sample_bound; c <= sample_bound; ++c)
        for (std::int64_t d = -sample_bound; d <= sample_bound; ++d) {
          const auto beta = HQ::from_doubled({a, b, c, d});
          if (s_membership(beta)) continue;
          // Re(beta x) in doubled coordinates is (b0x0 - b1x1 - b2x2 - b3x3) / 4.
          bool detected = false;
          for (const auto& x : o_basis())
            if ((beta[0] * x[0] - beta[1] * x[1] - beta[2] * x[2] - beta[3] * x[3]) % 4 != 0) {
              detected = true;
              break;
            }
          if (!detected) return false;
        }
  return true;
}

}  // namespace qll
