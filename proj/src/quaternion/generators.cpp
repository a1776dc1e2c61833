#include "qll/quaternion/generators.hpp"

#include <stdexcept>

#include "qll/quaternion/euclid.hpp"

namespace qll {

namespace {

bool is_unit(const HurwitzQuaternion& x) { return x.in_order() && x.norm4() == 4; }

}  // namespace

QuaternionMatrix2 QuaternionMatrix2::identity() {
  return {HurwitzQuaternion::one(), HurwitzQuaternion(), HurwitzQuaternion(), HurwitzQuaternion::one()};
}

QuaternionMatrix2 operator*(const QuaternionMatrix2& x, const QuaternionMatrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool QuaternionMatrix2::entries_in_order() const { return a.in_order() && b.in_order() && c.in_order() && d.in_order(); }

std::string QuaternionMatrix2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

QuaternionMatrix2 Generator::matrix() const {
  const auto one = HurwitzQuaternion::one();
  const HurwitzQuaternion zero;
  switch (kind) {
    case Kind::S:
      return {zero, one, -one, zero};
    case Kind::D:
      return {param, zero, zero, one};
    case Kind::T:
      return {one, param, zero, one};
  }
  throw std::logic_error("bad generator kind");
}

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::S:
      return "S";
    case Kind::D:
      return "D(" + param.to_string() + ")";
    case Kind::T:
      return "T(" + param.to_string() + ")";
  }
  return "?";
}

QuaternionMatrix2 recompose(const GeneratorWord& word) {
  auto out = QuaternionMatrix2::identity();
  for (const auto& g : word) out = out * g.matrix();
  return out;
}

DecompositionResult generator_decompose(const QuaternionMatrix2& m) {
  if (!m.entries_in_order()) throw std::invalid_argument("generator_decompose: entries must lie in O");

  // Left multiplications applied so far, in order: applied[k] ... applied[0] * m = cur.
  GeneratorWord applied;
  QuaternionMatrix2 cur = m;
  while (!cur.c.is_zero()) {
    const auto [q, r] = euclid_div(cur.a, cur.c);
    if (!q.is_zero()) {
      const auto g = Generator::t(-q);
      cur = g.matrix() * cur;
      applied.push_back(g);
    }
    cur = Generator::s().matrix() * cur;
    applied.push_back(Generator::s());
  }

  DecompositionResult out;
  if (!is_unit(cur.a) || !is_unit(cur.d)) {
    out.residue = cur;
    return out;
  }
  out.invertible = true;

  // m = applied[0]^-1 ... applied[k]^-1 * cur.
  for (const auto& g : applied) {
    switch (g.kind) {
      case Generator::Kind::S:
        out.word.insert(out.word.end(), 3, Generator::s());
        break;
      case Generator::Kind::T:
        out.word.push_back(Generator::t(-g.param));
        break;
      case Generator::Kind::D:
        out.word.push_back(Generator::d(unit_inverse(g.param)));
        break;
    }
  }

  // [[alpha, beta], [0, delta]] = D_alpha * (S D_delta S^3) * T_{alpha^-1 beta}.
  const auto one = HurwitzQuaternion::one();
  if (cur.a != one) out.word.push_back(Generator::d(cur.a));
  if (cur.d != one) {
    out.word.push_back(Generator::s());
    out.word.push_back(Generator::d(cur.d));
    out.word.insert(out.word.end(), 3, Generator::s());
  }
  const auto shift = unit_inverse(cur.a) * cur.b;
  if (!shift.is_zero()) out.word.push_back(Generator::t(shift));
  return out;
}

GeneratorWord random_generator_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> unit_pick(0, units().size() - 1);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  std::uniform_int_distribution<int> parity(0, 1);
  GeneratorWord word;
  word.reserve(length);
  for (std::size_t n = 0; n < length; ++n) {
    switch (kind(rng)) {
      case 0:
        word.push_back(Generator::s());
        break;
      case 1:
        word.push_back(Generator::d(units()[unit_pick(rng)]));
        break;
      default: {
        // Even doubled coordinates in {-2, 0, 2} or odd ones in {-1, 1}.
        HurwitzQuaternion::Coords t{};
        const bool odd = parity(rng) == 1;
        for (auto& x : t) {
          const std::int64_t v = coord(rng);
          x = odd ? (v >= 0 ? 1 : -1) : (v / 2) * 2;
        }
        word.push_back(Generator::t(HurwitzQuaternion::from_doubled(t)));
        break;
      }
    }
  }
  return word;
}

}  // namespace qll
