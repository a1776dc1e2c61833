#include "qll/number/linalg.hpp"

#include <stdexcept>

namespace qll {

Matrix<Integer> hermite_normal_form(Matrix<Integer> m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r..end until one nonzero entry is left.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(m[i][c]) != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(m[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
        if (sgn(m[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m[r][c]) == 0) continue;
    if (sgn(m[r][c]) < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Integer determinant(Matrix<Integer> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool solve_rational(const Matrix<Rational>& m, const std::vector<Rational>& b, std::vector<Rational>& x) {
  const std::size_t n = m.size();
  Matrix<Rational> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("solve_rational: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return false;
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return true;
}

}  // namespace qll
