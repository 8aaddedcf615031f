#include <cmath>
#include <stdexcept>

#include "evanescent/numerics.hpp"

namespace evanescent::numerics {

Complex bessel_exponential_integral(int nu, double rho, double z, double k_d) {
  if (nu != 1 && nu != 2) throw std::invalid_argument("closed form available for nu = 1, 2");
  if (!(rho >= 0.0) || !(k_d >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("closed form needs rho >= 0, k_d >= 0 and finite z");
  }
  const double r = std::hypot(rho, z);
  if (r == 0.0) throw std::invalid_argument("closed form is singular at rho = z = 0");

  // sum_j (n+j)! / (j! (n-j)!) tau^(n-j) (2r)^-j, n = nu + 1, tau = -i k_d
  const int n = nu + 1;
  const Complex tau(0.0, -k_d);
  Complex sum(0.0, 0.0);
  double factor = 1.0;  // (n+j)!/(j!(n-j)!)
  for (int j = 0; j <= n; ++j) {
    if (j > 0) factor *= static_cast<double>((n + j) * (n - j + 1)) / j;
    sum += factor * std::pow(tau, n - j) * std::pow(2.0 * r, -j);
  }
  const Complex phase = std::exp(Complex(0.0, k_d * r));
  return std::pow(rho, nu) * std::abs(z) * std::pow(r, -nu - 2) * phase * sum;
}

}  // namespace evanescent::numerics
