#include "qll/theta/bessel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qll {

double bessel_k_imag(double r, double y) {
  if (!(y > 0)) throw std::invalid_argument("bessel_k_imag: y must be positive");
  // Beyond T the integrand is below exp(-y - 60).
  const double upper = std::acosh(1.0 + 60.0 / y);
  // Chunks short enough to resolve both the oscillation and the peak at t = 0.
  double width = std::min(1.0, 2.0 / std::sqrt(y));
  if (r != 0) width = std::min(width, std::numbers::pi / std::abs(r));
  const auto f = [r, y](double t) { return std::exp(-y * std::cosh(t)) * std::cos(r * t); };
  double sum = 0.0;
  for (double a = 0.0; a < upper; a += width) {
    const double b = std::min(upper, a + width);
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-14);
  }
  return sum;
}

double bessel_k_bound(double y) { return std::sqrt(std::numbers::pi / (2.0 * y)) * std::exp(-y); }

}  // namespace qll
