#include <cmath>
#include <stdexcept>
#include <vector>

#include "evanescent/numerics.hpp"
#include "evanescent/numerics/adaptive.hpp"

namespace evanescent::numerics {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("abs_tol must be non-negative");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
  if (tail_decades < 10) throw std::invalid_argument("tail_decades must be >= 10");
}

Complex integrate_semi_infinite(const std::function<Complex(double)>& integrand,
                                double lower, double decay_scale,
                                const QuadratureSpec& spec) {
  spec.validate();
  return detail::semi_infinite<Complex>(integrand, lower, decay_scale, spec).value;
}

double integrate_semi_infinite_real(const std::function<double(double)>& integrand,
                                    double lower, double decay_scale,
                                    const QuadratureSpec& spec) {
  spec.validate();
  return detail::semi_infinite<double>(integrand, lower, decay_scale, spec).value;
}

Complex integrate_finite(const std::function<Complex(double)>& integrand, double a,
                         double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integration limits must be finite");
  }
  return detail::finite<Complex>(integrand, a, b, spec).value;
}

double integrate_log_frequency(const std::function<double(double)>& integrand,
                               double omega_min, double omega_max,
                               const QuadratureSpec& spec) {
  spec.validate();
  if (!(omega_min > 0.0) || !(omega_max > omega_min) || !std::isfinite(omega_max)) {
    throw std::invalid_argument("frequency window needs 0 < omega_min < omega_max");
  }
  const double s0 = std::log(omega_min);
  const double s1 = std::log(omega_max);
  // one panel per e-fold
  const int panels = std::max(1, static_cast<int>(std::ceil(s1 - s0)));
  std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) breaks[static_cast<std::size_t>(i)] = s0 + (s1 - s0) * i / panels;
  breaks.back() = s1;
  auto in_log = [&](double s) {
    const double omega = std::exp(s);
    return omega * integrand(omega);
  };
  return detail::adaptive<double>(in_log, breaks, spec).value;
}

}  // namespace evanescent::numerics
