#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qll/number/rational.hpp"

namespace qll {

template <class F>
using Matrix = std::vector<std::vector<F>>;

inline Rational field_inverse(const Rational& q) { return inverse(q); }
template <class F>
F field_inverse(const F& x) {
  return x.inverse();
}

/**
 * In-place reduced row echelon form over a field F. Returns pivot columns.
 * F needs +, -, *, unary -, inverse(), and is_zero().
 */
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  using std::swap;
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && is_zero(m[pr][c])) ++pr;
    if (pr == rows) continue;
    swap(m[r], m[pr]);
    const F inv = field_inverse(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(m[r][k])) m[i][k] = m[i][k] - f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of {x : m x = 0}, one vector per free column (free entry 1).
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
  std::vector<std::vector<F>> out;
  if (m.empty()) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<F> v(cols, F(0));
      v[c] = F(1);
      out.push_back(std::move(v));
    }
    return out;
  }
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Row-style Hermite normal form of an integer matrix (rows span the lattice);
/// zero rows dropped, pivots positive, entries above pivots reduced to [0, pivot).
Matrix<Integer> hermite_normal_form(Matrix<Integer> m);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(Matrix<Integer> m);

/// Solves m x = b over Q for square invertible m; returns false if singular.
bool solve_rational(const Matrix<Rational>& m, const std::vector<Rational>& b, std::vector<Rational>& x);

}  // namespace qll
