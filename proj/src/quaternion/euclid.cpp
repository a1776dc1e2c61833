#include "qll/quaternion/euclid.hpp"

#include <stdexcept>

namespace qll {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

DivisionResult euclid_div(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
  if (b.is_zero()) throw std::invalid_argument("euclid_div: division by zero");
  if (!a.in_order() || !b.in_order()) throw std::invalid_argument("euclid_div: operands must lie in O");

  // a * b^-1 = a * conj(b) / nu(b); its i-th coordinate is x[i] / (2 n).
  const auto x = (a * b.conj()).doubled();
  const std::int64_t n = b.norm_int();

  std::array<std::array<std::int64_t, 2>, 4> whole{};
  std::array<std::array<std::int64_t, 2>, 4> half{};
  for (int i = 0; i < 4; ++i) {
    const std::int64_t f = floor_div(x[i], 2 * n);
    whole[i] = {2 * f, 2 * f + 2};
    const std::int64_t h = floor_div(x[i] - n, 2 * n);
    half[i] = {2 * h + 1, 2 * h + 3};
  }

  bool found = false;
  DivisionResult best;
  std::int64_t best_norm = 0;
  for (const auto* grid : {&whole, &half}) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      HurwitzQuaternion::Coords t{};
      for (int i = 0; i < 4; ++i) t[i] = (*grid)[i][(mask >> i) & 1u];
      const auto q = HurwitzQuaternion::from_doubled(t);
      const auto r = a - q * b;
      const auto nr = r.norm4();
      if (!found || nr < best_norm || (nr == best_norm && q < best.quotient)) {
        found = true;
        best = {q, r};
        best_norm = nr;
      }
    }
  }
  if (best_norm >= b.norm4()) throw std::logic_error("euclid_div: no quotient reduced the norm");
  return best;
}

}  // namespace qll
