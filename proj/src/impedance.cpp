#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "evanescent/constants.hpp"
#include "evanescent/errors.hpp"
#include "evanescent/numerics/adaptive.hpp"
#include "evanescent/reflection.hpp"

namespace evanescent {

namespace {

constexpr int kScanPoints = 600;
constexpr double kRangeFactor = 1e8;

}  // namespace

Complex z_te_impedance(const std::function<Complex(double)>& eps_of_k, double omega,
                       double k_perp, const numerics::QuadratureSpec& spec) {
  spec.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("z_te_impedance needs omega > 0");
  if (!(k_perp >= 0.0)) throw std::invalid_argument("z_te_impedance needs k_perp >= 0");

  const double k0 = omega / constants::speed_of_light;
  const double k0sq = k0 * k0;
  const double kp2 = k_perp * k_perp;

  auto denominator = [&](double kz) {
    const double k = std::sqrt(kp2 + kz * kz);
    return k0sq * eps_of_k(k) - kp2 - kz * kz;
  };
  auto term_scale = [&](double kz) {
    const double k = std::sqrt(kp2 + kz * kz);
    return k0sq * std::abs(eps_of_k(k)) + kp2 + kz * kz;
  };

  // Characteristic wave numbers: the local root, k_perp and the scale at which
  // the k-dependent part of eps takes over.
  const Complex local_root = std::sqrt(k0sq * eps_of_k(k_perp) - kp2);
  std::vector<double> scales;
  if (std::abs(local_root) > 0.0) scales.push_back(std::abs(local_root));
  if (k_perp > 0.0) scales.push_back(k_perp);
  const double probe = std::max({std::abs(local_root), k_perp, k0});
  const double beta = k0sq * std::abs(eps_of_k(std::hypot(k_perp, probe)) - eps_of_k(k_perp)) / probe;
  if (beta > 0.0 && std::isfinite(beta)) scales.push_back(beta);
  if (scales.empty()) scales.push_back(k0);
  const auto [lo_it, hi_it] = std::minmax_element(scales.begin(), scales.end());
  const double k_lo = *lo_it / kRangeFactor;
  const double k_hi = *hi_it * kRangeFactor;
  const double s_lo = std::log(k_lo);
  const double s_hi = std::log(k_hi);

  // A real zero of the denominator on the integration path cannot be
  // integrated along the real axis; report it instead of deforming the path.
  {
    double prev_re = 0.0;
    bool prev_real = false;
    for (int i = 0; i <= kScanPoints; ++i) {
      const double kz = std::exp(s_lo + (s_hi - s_lo) * i / kScanPoints);
      const Complex d = denominator(kz);
      const double scale = term_scale(kz);
      if (std::abs(d) <= 1e-14 * scale) {
        throw NumericalError(ErrorKind::PoleOnContour, "impedance integrand has a pole on the real axis");
      }
      const bool real = std::abs(d.imag()) <= 1e-12 * scale;
      if (i > 0 && real && prev_real && (d.real() > 0.0) != (prev_re > 0.0)) {
        std::ostringstream os;
        os << "impedance integrand has a pole on the real axis near k_z = " << kz;
        throw NumericalError(ErrorKind::PoleOnContour, os.str());
      }
      prev_re = d.real();
      prev_real = real;
    }
  }

  auto in_log = [&](double s) {
    const double kz = std::exp(s);
    return Complex(kz) / denominator(kz);
  };
  const int panels = std::max(1, static_cast<int>(std::ceil(s_hi - s_lo)));
  const auto body = numerics::detail::finite<Complex>(in_log, s_lo, s_hi, spec, panels);

  // [0, k_lo] by the trapezoid rule, [k_hi, inf) from the 1/D ~ -1/k_z^2 tail.
  const Complex lower_tail = 0.5 * k_lo * (1.0 / denominator(0.0) + 1.0 / denominator(k_lo));
  const Complex upper_tail = k_hi / denominator(k_hi);
  const Complex half_line = body.value + lower_tail + upper_tail;
  const Complex z = Complex(0.0, k0 / constants::pi) * 2.0 * half_line;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NumericalError(ErrorKind::NotANumber, "impedance integral is not finite");
  }
  return z;
}

Complex z_te_impedance(const MaterialParams& params, double omega, double k_perp,
                       const numerics::QuadratureSpec& spec) {
  params.validate();
  params.v_transverse();  // throws without v_fermi
  return z_te_impedance(
      [&](double k) { return eps_transverse_nonlocal(params, omega, k).value; }, omega, k_perp,
      spec);
}

}  // namespace evanescent
