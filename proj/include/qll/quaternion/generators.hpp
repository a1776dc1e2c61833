#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qll/quaternion/hurwitz.hpp"

namespace qll {

/// 2x2 matrix over B, entries row-major {a, b, c, d}.
struct QuaternionMatrix2 {
  HurwitzQuaternion a, b, c, d;

  static QuaternionMatrix2 identity();
  friend QuaternionMatrix2 operator*(const QuaternionMatrix2& x, const QuaternionMatrix2& y);
  friend bool operator==(const QuaternionMatrix2&, const QuaternionMatrix2&) = default;
  bool entries_in_order() const;
  std::string to_string() const;
};

/// S = [[0,1],[-1,0]], D_u = [[u,0],[0,1]] (u a unit), T_v = [[1,v],[0,1]] (v in O).
struct Generator {
  enum class Kind { S, D, T };
  Kind kind = Kind::S;
  HurwitzQuaternion param;

  static Generator s() { return {Kind::S, {}}; }
  static Generator d(const HurwitzQuaternion& u) { return {Kind::D, u}; }
  static Generator t(const HurwitzQuaternion& v) { return {Kind::T, v}; }

  QuaternionMatrix2 matrix() const;
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

using GeneratorWord = std::vector<Generator>;

/// Ordered product of the word (identity for the empty word).
QuaternionMatrix2 recompose(const GeneratorWord& word);

struct DecompositionResult {
  bool invertible = false;
  GeneratorWord word;
  /// When not invertible: the upper-triangular matrix the elimination stopped at.
  std::optional<QuaternionMatrix2> residue;
};

/**
 * Writes M in GL2(O) as a word in S, D_u, T_v by Euclidean elimination of the
 * lower-left entry. A non-unit diagonal at the end means M is not in GL2(O);
 * that is reported as invertible = false. Throws std::invalid_argument if an
 * entry of M is not in O.
 */
DecompositionResult generator_decompose(const QuaternionMatrix2& m);

/// Random word of the given length; T parameters have doubled coordinates in [-2, 2].
GeneratorWord random_generator_word(std::mt19937_64& rng, std::size_t length);

}  // namespace qll
