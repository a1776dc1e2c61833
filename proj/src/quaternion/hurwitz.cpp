#include "qll/quaternion/hurwitz.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace qll {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("quaternion coordinate overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) { return narrow(static_cast<i128>(a) * b); }

// Hamilton product of coordinate vectors.
std::array<i128, 4> hamilton(const HurwitzQuaternion::Coords& a, const HurwitzQuaternion::Coords& b) {
  const i128 a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
  const i128 b0 = b[0], b1 = b[1], b2 = b[2], b3 = b[3];
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1, a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

}  // namespace

HurwitzQuaternion HurwitzQuaternion::from_integers(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return from_doubled({checked_mul(a, 2), checked_mul(b, 2), checked_mul(c, 2), checked_mul(d, 2)});
}

bool HurwitzQuaternion::in_order() const {
  const auto par = t_[0] & 1;
  return (t_[1] & 1) == par && (t_[2] & 1) == par && (t_[3] & 1) == par;
}

std::int64_t HurwitzQuaternion::norm4() const {
  i128 s = 0;
  for (auto x : t_) s += static_cast<i128>(x) * x;
  return narrow(s);
}

Rational HurwitzQuaternion::norm() const { return make_rational(norm4(), 4); }

std::int64_t HurwitzQuaternion::norm_int() const {
  const auto n4 = norm4();
  if (n4 % 4 != 0) throw std::domain_error("norm of " + to_string() + " is not an integer");
  return n4 / 4;
}

HurwitzQuaternion& HurwitzQuaternion::operator+=(const HurwitzQuaternion& o) {
  for (int i = 0; i < 4; ++i) t_[i] = narrow(static_cast<i128>(t_[i]) + o.t_[i]);
  return *this;
}

HurwitzQuaternion& HurwitzQuaternion::operator-=(const HurwitzQuaternion& o) {
  for (int i = 0; i < 4; ++i) t_[i] = narrow(static_cast<i128>(t_[i]) - o.t_[i]);
  return *this;
}

HurwitzQuaternion operator*(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
  // (ta / 2)(tb / 2) = H(ta, tb) / 4, so the doubled product is H / 2.
  const auto h = hamilton(a.t_, b.t_);
  HurwitzQuaternion out;
  for (int i = 0; i < 4; ++i) {
    if (h[i] % 2 != 0) throw std::domain_error("quaternion product leaves the half-integer lattice");
    out.t_[i] = narrow(h[i] / 2);
  }
  return out;
}

HurwitzQuaternion HurwitzQuaternion::scaled(std::int64_t n) const {
  return from_doubled({checked_mul(t_[0], n), checked_mul(t_[1], n), checked_mul(t_[2], n), checked_mul(t_[3], n)});
}

std::optional<HurwitzQuaternion> HurwitzQuaternion::divided_by(std::int64_t n) const {
  if (n == 0) throw std::domain_error("division by zero");
  Coords out{};
  for (int i = 0; i < 4; ++i) {
    if (t_[i] % n != 0) return std::nullopt;
    out[i] = t_[i] / n;
  }
  return from_doubled(out);
}

std::optional<HurwitzQuaternion> HurwitzQuaternion::divided_in_order(std::int64_t n) const {
  auto q = divided_by(n);
  if (!q || !q->in_order()) return std::nullopt;
  return q;
}

Quaternion HurwitzQuaternion::to_rational() const {
  return Quaternion({make_rational(t_[0], 2), make_rational(t_[1], 2), make_rational(t_[2], 2), make_rational(t_[3], 2)});
}

std::string HurwitzQuaternion::to_string() const { return to_rational().to_string(); }

Rational Quaternion::norm() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

Quaternion Quaternion::conj() const { return Quaternion({c_[0], -c_[1], -c_[2], -c_[3]}); }

bool Quaternion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return qll::is_zero(q); });
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw std::domain_error("quaternion division by zero");
  return conj() * qll::inverse(norm());
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& x = a.c_;
  const auto& y = b.c_;
  return Quaternion({x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                     x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                     x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                     x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]});
}

Quaternion Quaternion::operator*(const Rational& s) const {
  return Quaternion({c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s});
}

std::optional<HurwitzQuaternion> Quaternion::to_hurwitz() const {
  HurwitzQuaternion::Coords t{};
  for (int i = 0; i < 4; ++i) {
    Rational d = 2 * c_[i];
    if (!is_integer(d) || !d.get_num().fits_slong_p()) return std::nullopt;
    t[i] = d.get_num().get_si();
  }
  return HurwitzQuaternion::from_doubled(t);
}

std::string Quaternion::to_string() const {
  static const char* units[] = {"", "i", "j", "k"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& q = c_[i];
    if (qll::is_zero(q)) continue;
    if (sgn(q) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const Rational mag = abs(q);
    if (i == 0 || mag != 1) out += mag.get_str();
    out += units[i];
  }
  return out.empty() ? "0" : out;
}

Quaternion parse_quaternion(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty quaternion");
  std::array<Rational, 4> c{};
  const auto fail = [&text]() { return std::invalid_argument("bad quaternion '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    const std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.')) ++pos;
    const bool has_number = pos > start;
    Rational coeff = 1;
    if (has_number) coeff = parse_rational(std::string_view(s).substr(start, pos - start));
    bool star = false;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_number) throw fail();
      star = true;
      ++pos;
    }
    int slot = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      slot = 1 + (s[pos] - 'i');
      ++pos;
    } else if (!has_number || star) {
      throw fail();
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail();
    c[slot] += negative ? Rational(-coeff) : coeff;
  }
  return Quaternion(c);
}

HurwitzQuaternion parse_hurwitz(std::string_view text) {
  auto q = parse_quaternion(text).to_hurwitz();
  if (!q) throw std::invalid_argument("quaternion '" + std::string(text) + "' has coordinates outside (1/2)Z");
  return *q;
}

const std::vector<HurwitzQuaternion>& units() {
  static const std::vector<HurwitzQuaternion> list = [] {
    std::vector<HurwitzQuaternion> out;
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -2; b <= 2; ++b)
        for (std::int64_t c = -2; c <= 2; ++c)
          for (std::int64_t d = -2; d <= 2; ++d) {
            auto q = HurwitzQuaternion::from_doubled({a, b, c, d});
            if (q.in_order() && q.norm4() == 4) out.push_back(q);
          }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return list;
}

HurwitzQuaternion unit_inverse(const HurwitzQuaternion& u) {
  if (!u.in_order() || u.norm4() != 4) throw std::domain_error(u.to_string() + " is not a unit");
  return u.conj();
}

std::size_t HurwitzQuaternionHash::operator()(const HurwitzQuaternion& q) const noexcept {
  std::size_t h = 0;
  for (auto x : q.doubled()) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
  return h;
}

}  // namespace qll
