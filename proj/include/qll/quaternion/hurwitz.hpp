#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qll/number/rational.hpp"

namespace qll {

class Quaternion;

/**
 * Quaternion (t0 + t1 i + t2 j + t3 k) / 2 with integer doubled coordinates.
 *
 * Any such element of B is representable; membership in the Hurwitz order O
 * holds iff all t are congruent mod 2. Arithmetic is overflow-checked and
 * throws std::overflow_error rather than wrapping.
 */
class HurwitzQuaternion {
 public:
  using Coords = std::array<std::int64_t, 4>;

  constexpr HurwitzQuaternion() = default;
  static constexpr HurwitzQuaternion from_doubled(Coords t) {
    HurwitzQuaternion q;
    q.t_ = t;
    return q;
  }
  /// a + b i + c j + d k with integer components.
  static HurwitzQuaternion from_integers(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static HurwitzQuaternion one() { return from_doubled({2, 0, 0, 0}); }
  static HurwitzQuaternion i() { return from_doubled({0, 2, 0, 0}); }
  static HurwitzQuaternion j() { return from_doubled({0, 0, 2, 0}); }
  static HurwitzQuaternion k() { return from_doubled({0, 0, 0, 2}); }
  /// omega = (1 + i + j + k) / 2.
  static HurwitzQuaternion omega() { return from_doubled({1, 1, 1, 1}); }
  /// The uniformizer 1 + i above 2.
  static HurwitzQuaternion varpi() { return from_doubled({2, 2, 0, 0}); }

  const Coords& doubled() const { return t_; }
  std::int64_t operator[](std::size_t idx) const { return t_[idx]; }

  bool in_order() const;
  bool is_zero() const { return t_ == Coords{0, 0, 0, 0}; }

  /// Sum of squared doubled coordinates, i.e. 4 * nu.
  std::int64_t norm4() const;
  Rational norm() const;
  /// nu as an integer; throws std::domain_error if nu is not integral.
  std::int64_t norm_int() const;
  /// Reduced trace x + conj(x) = t0.
  Rational trace() const { return Rational(static_cast<long>(t_[0])); }

  HurwitzQuaternion conj() const { return from_doubled({t_[0], -t_[1], -t_[2], -t_[3]}); }
  HurwitzQuaternion operator-() const { return from_doubled({-t_[0], -t_[1], -t_[2], -t_[3]}); }
  HurwitzQuaternion& operator+=(const HurwitzQuaternion& o);
  HurwitzQuaternion& operator-=(const HurwitzQuaternion& o);
  friend HurwitzQuaternion operator+(HurwitzQuaternion a, const HurwitzQuaternion& b) { return a += b; }
  friend HurwitzQuaternion operator-(HurwitzQuaternion a, const HurwitzQuaternion& b) { return a -= b; }
  /// Throws std::domain_error if the product leaves (1/2)Z^4 (possible only outside O).
  friend HurwitzQuaternion operator*(const HurwitzQuaternion& a, const HurwitzQuaternion& b);
  /// Integer scalar multiple.
  HurwitzQuaternion scaled(std::int64_t n) const;

  /// x / n when it stays in (1/2)Z^4.
  std::optional<HurwitzQuaternion> divided_by(std::int64_t n) const;
  /// Exact x / n in O, if any ("n divides x").
  std::optional<HurwitzQuaternion> divided_in_order(std::int64_t n) const;

  Quaternion to_rational() const;
  /// Text form such as "1+i", "1/2-1/2i+1/2j+1/2k", "0".
  std::string to_string() const;

  friend bool operator==(const HurwitzQuaternion&, const HurwitzQuaternion&) = default;
  friend auto operator<=>(const HurwitzQuaternion& a, const HurwitzQuaternion& b) { return a.t_ <=> b.t_; }

 private:
  Coords t_{0, 0, 0, 0};
};

/// General element of B with rational coordinates a + b i + c j + d k.
class Quaternion {
 public:
  Quaternion() = default;
  explicit Quaternion(std::array<Rational, 4> c) : c_(std::move(c)) {}

  const std::array<Rational, 4>& coords() const { return c_; }
  Rational norm() const;
  Rational trace() const { return 2 * c_[0]; }
  Rational real_part() const { return c_[0]; }
  Quaternion conj() const;
  /// Throws std::domain_error on zero.
  Quaternion inverse() const;
  bool is_zero() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  Quaternion operator*(const Rational& s) const;

  /// The same element in doubled-integer form, if all coordinates lie in (1/2)Z.
  std::optional<HurwitzQuaternion> to_hurwitz() const;
  std::string to_string() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  std::array<Rational, 4> c_{};
};

/// Parses "a+bi+cj+dk" with rational components (any order, terms optional, "*" allowed).
/// Throws std::invalid_argument on malformed input.
Quaternion parse_quaternion(std::string_view text);
/// As parse_quaternion, additionally requiring coordinates in (1/2)Z.
HurwitzQuaternion parse_hurwitz(std::string_view text);

/// The 24 units of O, sorted by doubled coordinates.
const std::vector<HurwitzQuaternion>& units();

/// Inverse of a unit (its conjugate); throws std::domain_error for non-units.
HurwitzQuaternion unit_inverse(const HurwitzQuaternion& u);

struct HurwitzQuaternionHash {
  std::size_t operator()(const HurwitzQuaternion& q) const noexcept;
};

}  // namespace qll
