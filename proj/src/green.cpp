#include <cmath>
#include <stdexcept>

#include "evanescent/constants.hpp"
#include "evanescent/dipole.hpp"
#include "evanescent/errors.hpp"
#include "evanescent/reflection.hpp"

namespace evanescent {

namespace {

constexpr Complex I(0.0, 1.0);

}  // namespace

// G'' + q~^2 G = -i (4 pi k_d / c) delta(z - h), G -> 0 as z -> inf and
// i k_d G(0) + Z G'(0) = 0. With G = A [rho e^{i q~ (z+h)} - e^{i q~ |z-h|}],
// A = 2 pi k_d / (c q~), the boundary condition fixes
// rho = (k_d - Z q~) / (k_d + Z q~).
FieldVector green_tensor_field(const DipoleConfig& cfg, double k_x, double k_y, double z,
                               Complex z_te) {
  cfg.validate();
  if (!(z > 0.0)) throw std::invalid_argument("observation height must be > 0");
  const double kd = cfg.k_d();
  const double kp = std::hypot(k_x, k_y);
  const Complex qd = decaying_sqrt(Complex((kd - kp) * (kd + kp), 0.0));
  if (qd == 0.0) {
    throw NumericalError(ErrorKind::DegenerateDenominator, "Green function singular at k_perp = k_d");
  }
  const Complex den = kd + z_te * qd;
  if (std::abs(den) <= 1e-14 * (kd + std::abs(z_te * qd))) {
    throw NumericalError(ErrorKind::DegenerateDenominator,
                         "impedance boundary condition has no bounded solution");
  }
  const Complex rho = (kd - z_te * qd) / den;
  const Complex amp = 2.0 * constants::pi * kd / (constants::speed_of_light * qd);

  const Complex up = std::exp(I * qd * (z + cfg.h));
  const Complex direct = std::exp(I * qd * std::abs(z - cfg.h));
  const double sign = z > cfg.h ? 1.0 : (z < cfg.h ? -1.0 : 0.0);
  const Complex g = amp * (rho * up - direct);
  const Complex dg = amp * I * qd * (rho * up - sign * direct);

  const double c = constants::speed_of_light;
  FieldVector out;
  out.x = c * cfg.m0 * k_x / kd * dg;
  out.y = c * cfg.m0 * k_y / kd * dg;
  out.z = -I * c * cfg.m0 * kp * kp / kd * g;
  return out;
}

FieldVector green_tensor_field(const DipoleConfig& cfg, double k_x, double k_y, double z,
                               const MaterialModel& model, const numerics::QuadratureSpec& spec) {
  model.validate();
  const double kp = std::hypot(k_x, k_y);
  return green_tensor_field(cfg, k_x, k_y, z, surface_impedance(model, cfg.omega_d, kp, spec));
}

}  // namespace evanescent
