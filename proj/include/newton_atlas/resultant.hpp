#pragma once

#include <utility>
#include <vector>

#include "bivariate.hpp"

namespace newton_atlas {

// Determinant of a square matrix over Q[t] by Bareiss fraction-free
// elimination. Every division is exact, so intermediate entries stay
// polynomials whose degrees are bounded by those of minors.
inline UnivariatePolynomial bareiss_determinant(std::vector<std::vector<UnivariatePolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UnivariatePolynomial::constant(1);
  bool negate = false;
  UnivariatePolynomial previous = UnivariatePolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UnivariatePolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(num, previous);
      }
      m[i][k] = UnivariatePolynomial();
    }
    previous = m[k][k];
  }
  UnivariatePolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Sylvester resultant of p and q with respect to `eliminate`, as a polynomial
// in the remaining variable. Convention: Res(p, q) = det of the Sylvester
// matrix with the deg(q) rows of p's coefficients first, highest power on the
// left, so Res_y(y - x, y + x) = 2x. When one input has degree zero in the
// eliminated variable, Res(c, q) = c^deg(q) and Res(p, c) = c^deg(p); two such
// inputs give 1. A zero input against a nonzero one gives 0.
inline UnivariatePolynomial resultant_eliminate(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                                Variable eliminate) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant_eliminate: both inputs are zero");
  if (p.is_zero() || q.is_zero()) return {};
  auto a = coefficients_in(p, eliminate);
  auto b = coefficients_in(q, eliminate);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  if (m == 0 && n == 0) return UnivariatePolynomial::constant(1);
  if (m == 0) return power(a[0], n);
  if (n == 0) return power(b[0], m);

  const std::size_t size = m + n;
  std::vector<std::vector<UnivariatePolynomial>> sylvester(size, std::vector<UnivariatePolynomial>(size));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + (m - k)] = a[k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + (n - k)] = b[k];
  return bareiss_determinant(std::move(sylvester));
}

}  // namespace newton_atlas
