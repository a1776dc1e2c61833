#pragma once

namespace qll {

/**
 * K_{ir}(y) = int_0^inf exp(-y cosh t) cos(r t) dt for y > 0, by adaptive
 * Gauss-Kronrod quadrature on a truncated range. Absolute error about 1e-12
 * for y >= 0.1, |r| <= 20. Throws std::invalid_argument if y <= 0.
 */
double bessel_k_imag(double r, double y);

/// sqrt(pi / (2y)) exp(-y), an upper bound for |K_{ir}(y)| valid for all real r and y > 0.
double bessel_k_bound(double y);

}  // namespace qll
