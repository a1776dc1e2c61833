#include "qll/theta/harmonic.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "qll/number/linalg.hpp"

namespace qll {

namespace {

using RationalPoly4 = std::map<Exponents, Rational>;

RationalPoly4 multiply(const RationalPoly4& a, const RationalPoly4& b) {
  RationalPoly4 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

// Image of the monomial x^e under x -> (y1, y2, y3, y4) with
// y1 = x1 - x2, y2 = x1 + x2, y3 = x3 - x4, y4 = x3 + x4 (the 1/sqrt2 factor is applied by the caller).
RationalPoly4 monomial_image(const Exponents& e) {
  static const std::array<RationalPoly4, 4> forms = [] {
    std::array<RationalPoly4, 4> f;
    f[0] = {{{1, 0, 0, 0}, Rational(1)}, {{0, 1, 0, 0}, Rational(-1)}};
    f[1] = {{{1, 0, 0, 0}, Rational(1)}, {{0, 1, 0, 0}, Rational(1)}};
    f[2] = {{{0, 0, 1, 0}, Rational(1)}, {{0, 0, 0, 1}, Rational(-1)}};
    f[3] = {{{0, 0, 1, 0}, Rational(1)}, {{0, 0, 0, 1}, Rational(1)}};
    return f;
  }();
  RationalPoly4 out{{{0, 0, 0, 0}, Rational(1)}};
  for (int i = 0; i < 4; ++i)
    for (unsigned k = 0; k < e[i]; ++k) out = multiply(out, forms[i]);
  return out;
}

Integer power_product(const HurwitzQuaternion& x, const Exponents& e) {
  Integer out = 1;
  for (int i = 0; i < 4; ++i) {
    Integer base(static_cast<long>(x[i]));
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e[i]);
    out *= pw;
  }
  return out;
}

Rational scale_for_degree(unsigned l) {
  // (1/sqrt2)^l for even l.
  return make_rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(l / 2));
}

std::vector<HarmonicPolynomial> build_basis(unsigned l) {
  const auto mons = monomials(l);
  const std::size_t n = mons.size();
  std::map<Exponents, std::size_t> col;
  for (std::size_t i = 0; i < n; ++i) col[mons[i]] = i;

  // Harmonic space over Q: kernel of the Laplacian.
  std::vector<std::vector<Rational>> kernel;
  if (l < 2) {
    kernel = nullspace(Matrix<Rational>{}, n);
  } else {
    const auto lower = monomials(l - 2);
    std::map<Exponents, std::size_t> row;
    for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
    Matrix<Rational> lap(lower.size(), std::vector<Rational>(n));
    for (std::size_t c = 0; c < n; ++c)
      for (int v = 0; v < 4; ++v) {
        const auto& e = mons[c];
        if (e[v] < 2) continue;
        Exponents f = e;
        f[v] -= 2;
        lap[row.at(f)][c] += Rational(static_cast<long>(e[v] * (e[v] - 1)));
      }
    kernel = nullspace(lap, n);
  }
  const std::size_t h = kernel.size();
  if (h != static_cast<std::size_t>((l + 1) * (l + 1))) throw std::logic_error("harmonic space has wrong dimension");

  // Free column of each kernel vector (the unique 1 among free columns).
  std::vector<std::size_t> free_col(h);
  {
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < h; ++j) {
      for (std::size_t c = 0; c < n; ++c) {
        bool unit = kernel[j][c] == 1;
        for (std::size_t k = 0; k < h && unit; ++k)
          if (k != j && !is_zero(kernel[k][c])) unit = false;
        if (unit && !used[c]) {
          free_col[j] = c;
          used[c] = true;
          break;
        }
      }
    }
  }

  // Substitution restricted to the harmonic space, in the kernel basis.
  const Rational scale = scale_for_degree(l);
  std::vector<RationalPoly4> images(n);
  for (std::size_t c = 0; c < n; ++c) images[c] = monomial_image(mons[c]);
  Matrix<Rational> m(h, std::vector<Rational>(h));
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<Rational> image(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (is_zero(kernel[j][c])) continue;
      for (const auto& [e, q] : images[c]) image[col.at(e)] += kernel[j][c] * q * scale;
    }
    for (std::size_t i = 0; i < h; ++i) m[i][j] = image[free_col[i]];
    for (std::size_t c = 0; c < n; ++c) {
      Rational expect;
      for (std::size_t i = 0; i < h; ++i) expect += m[i][j] * kernel[i][c];
      if (expect != image[c]) throw std::logic_error("substitution does not preserve the harmonic space");
    }
  }

  std::vector<HarmonicPolynomial> out;
  for (int k = 0; k < 8; ++k) {
    const CyclotomicValue z = CyclotomicValue::zeta_power(k);
    Matrix<CyclotomicValue> a(h, std::vector<CyclotomicValue>(h));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) a[i][j] = CyclotomicValue(m[i][j]) - (i == j ? z : CyclotomicValue());
    for (const auto& w : nullspace(a, h)) {
      HarmonicPolynomial p;
      p.l = l;
      p.eigenvalue = z;
      p.eigen_index = k;
      for (std::size_t j = 0; j < h; ++j) {
        if (is_zero(w[j])) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(kernel[j][c])) p.coeffs[mons[c]] += w[j] * CyclotomicValue(kernel[j][c]);
      }
      std::erase_if(p.coeffs, [](const auto& kv) { return is_zero(kv.second); });
      p.nu = out.size();
      out.push_back(std::move(p));
    }
  }
  if (out.size() != h) throw std::logic_error("substitution is not diagonalizable over Q(zeta_8)");
  return out;
}

}  // namespace

std::vector<Exponents> monomials(unsigned l) {
  std::vector<Exponents> out;
  for (int a = static_cast<int>(l); a >= 0; --a)
    for (int b = static_cast<int>(l) - a; b >= 0; --b)
      for (int c = static_cast<int>(l) - a - b; c >= 0; --c)
        out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c),
                       static_cast<unsigned>(static_cast<int>(l) - a - b - c)});
  return out;
}

Poly4 laplacian(const Poly4& p) {
  Poly4 out;
  for (const auto& [e, c] : p)
    for (int v = 0; v < 4; ++v) {
      if (e[v] < 2) continue;
      Exponents f = e;
      f[v] -= 2;
      out[f] += c * CyclotomicValue(static_cast<long>(e[v] * (e[v] - 1)));
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

Poly4 substitute_left_varpi(const Poly4& p, unsigned l) {
  // Odd l would need sqrt2 = zeta - zeta^3; the scale is applied in Q(zeta_8) either way.
  CyclotomicValue scale = pow(CyclotomicValue::sqrt2().inverse(), static_cast<long>(l));
  Poly4 out;
  for (const auto& [e, c] : p)
    for (const auto& [f, q] : monomial_image(e)) out[f] += c * CyclotomicValue(q) * scale;
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

const std::vector<HarmonicPolynomial>& harmonic_basis(unsigned l) {
  if (l % 2 != 0) throw std::invalid_argument("harmonic_basis: degree must be even (odd degree gives the zero theta series)");
  if (l > kMaxHarmonicDegree) throw std::invalid_argument("harmonic_basis: degree above " + std::to_string(kMaxHarmonicDegree));
  static std::mutex mutex;
  static std::map<unsigned, std::vector<HarmonicPolynomial>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, build_basis(l)).first;
  return it->second;
}

CyclotomicValue HarmonicPolynomial::eval(const HurwitzQuaternion& x) const {
  CyclotomicValue sum;
  for (const auto& [e, c] : coeffs) sum += c * CyclotomicValue(Rational(power_product(x, e)));
  return sum * CyclotomicValue(make_rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(l)));
}

double HarmonicPolynomial::coefficient_bound() const {
  double s = 0;
  for (const auto& [e, c] : coeffs) s += std::abs(c.to_complex());
  return s;
}

std::string HarmonicPolynomial::to_string() const {
  static const char* names[] = {"x1", "x2", "x3", "x4"};
  std::string out;
  for (const auto& [e, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      out += std::string("*") + names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out.empty() ? "0" : out;
}

void accumulate_moments(MomentTable& table, const std::vector<Exponents>& mons, const HurwitzQuaternion& x) {
  for (const auto& e : mons) table[e] += power_product(x, e);
}

CyclotomicValue eval_from_moments(const HarmonicPolynomial& p, const MomentTable& table) {
  CyclotomicValue sum;
  for (const auto& [e, c] : p.coeffs) {
    auto it = table.find(e);
    if (it != table.end() && sgn(it->second) != 0) sum += c * CyclotomicValue(Rational(it->second));
  }
  return sum * CyclotomicValue(make_rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(p.l)));
}

}  // namespace qll
