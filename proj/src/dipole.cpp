#include "evanescent/dipole.hpp"

#include <cmath>
#include <stdexcept>

#include "evanescent/constants.hpp"
#include "evanescent/errors.hpp"
#include "evanescent/numerics/adaptive.hpp"
#include "evanescent/reflection.hpp"

namespace evanescent {

namespace {

using constants::pi;
using constants::speed_of_light;

constexpr double kAxisRho = 1e-12;
constexpr Complex I(0.0, 1.0);

// J1(k rho) / rho with its on-axis limit.
double j1_over_rho(double k, double rho) {
  if (rho < kAxisRho) return 0.5 * k;
  return numerics::bessel_j(1, k * rho) / rho;
}

}  // namespace

void DipoleConfig::validate() const {
  if (!(m0 > 0.0) || !std::isfinite(m0)) throw std::invalid_argument("m0 must be > 0");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("h must be > 0");
  if (!(omega_d > 0.0) || !std::isfinite(omega_d)) throw std::invalid_argument("omega_d must be > 0");
}

double DipoleConfig::k_d() const { return omega_d / speed_of_light; }

bool DipoleConfig::quasistationary(double r, double limit) const { return k_d() * r < limit; }

double FieldPoint::rho() const { return std::hypot(x, y); }

FieldVector& FieldVector::operator+=(const FieldVector& other) {
  x += other.x;
  y += other.y;
  z += other.z;
  return *this;
}

FieldVector operator+(FieldVector lhs, const FieldVector& rhs) { return lhs += rhs; }

FieldSample free_space_field(const DipoleConfig& cfg, const FieldPoint& pt) {
  cfg.validate();
  const double r = std::sqrt(pt.x * pt.x + pt.y * pt.y + pt.z * pt.z);
  if (!(r > 0.0)) throw std::invalid_argument("free-space field is singular at the dipole");
  const double kd = cfg.k_d();
  const Complex phase = std::exp(I * (kd * r));
  const double r2 = r * r;
  const Complex radial = Complex(kd * kd / r, 0.0) + 3.0 * I * kd / r2 - 3.0 / (r2 * r);
  FieldSample out;
  out.free_space.x = -cfg.m0 * pt.x * pt.z / r2 * radial * phase;
  out.free_space.y = -cfg.m0 * pt.y * pt.z / r2 * radial * phase;
  out.free_space.z =
      cfg.m0 * (Complex(kd * kd / r, 0.0) + I * kd / r2 - 1.0 / (r2 * r) - pt.z * pt.z / r2 * radial) *
      phase;
  return out;
}

FieldVector free_space_electric(const DipoleConfig& cfg, const FieldPoint& pt) {
  cfg.validate();
  const double r = std::sqrt(pt.x * pt.x + pt.y * pt.y + pt.z * pt.z);
  if (!(r > 0.0)) throw std::invalid_argument("free-space field is singular at the dipole");
  const double kd = cfg.k_d();
  const Complex common = I * cfg.m0 * kd * (I * kd / (r * r) - 1.0 / (r * r * r)) *
                         std::exp(I * (kd * r));
  return FieldVector{common * pt.y, -common * pt.x, Complex(0.0, 0.0)};
}

FieldVector fourier_component(const DipoleConfig& cfg, double k_x, double k_y, double z) {
  cfg.validate();
  const double kd = cfg.k_d();
  const double kp2 = k_x * k_x + k_y * k_y;
  const Complex qd = decaying_sqrt(Complex((kd - std::sqrt(kp2)) * (kd + std::sqrt(kp2)), 0.0));
  const Complex wave = std::exp(I * qd * std::abs(z));
  const double sign = z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
  FieldVector out;
  out.x = -2.0 * pi * I * cfg.m0 * k_x * sign * wave;
  out.y = -2.0 * pi * I * cfg.m0 * k_y * sign * wave;
  if (kp2 == 0.0) {
    out.z = 0.0;
  } else {
    if (qd == 0.0) {
      throw NumericalError(ErrorKind::DegenerateDenominator,
                           "H_z plane-wave amplitude has a pole at k_perp = k_d");
    }
    out.z = 2.0 * pi * I * cfg.m0 * kp2 / qd * wave;
  }
  return out;
}

FieldVector image_fourier_component(const DipoleConfig& cfg, double k_x, double k_y, double z,
                                    Complex r_te) {
  cfg.validate();
  const double kd = cfg.k_d();
  const double kp = std::hypot(k_x, k_y);
  const Complex qd = decaying_sqrt(Complex((kd - kp) * (kd + kp), 0.0));
  if (qd == 0.0) {
    throw NumericalError(ErrorKind::DegenerateDenominator,
                         "H_z plane-wave amplitude has a pole at k_perp = k_d");
  }
  const Complex image = r_te * std::exp(I * qd * (z + cfg.h));
  const Complex direct = std::exp(I * qd * std::abs(z - cfg.h));
  const double sign = z > cfg.h ? 1.0 : (z < cfg.h ? -1.0 : 0.0);
  FieldVector out;
  out.x = -2.0 * pi * I * cfg.m0 * k_x * (image + sign * direct);
  out.y = -2.0 * pi * I * cfg.m0 * k_y * (image + sign * direct);
  out.z = 2.0 * pi * I * cfg.m0 * kp * kp / qd * (image + direct);
  return out;
}

FieldSample reflected_field(const DipoleConfig& cfg, const FieldPoint& pt, const ReflectionFn& r_te,
                            const numerics::QuadratureSpec& spec, LowerLimit lower) {
  cfg.validate();
  spec.validate();
  if (!(pt.z > 0.0)) throw std::invalid_argument("observation point must lie above the plate");
  const double kd = cfg.k_d();
  const double rho = pt.rho();
  const double depth = pt.z + cfg.h;

  // Evanescent part in u = sqrt(k^2 - k_d^2): k dk = u du removes the
  // endpoint singularity of the H_z kernel.
  auto lateral = [&](double u) {
    const double k = std::sqrt(u * u + kd * kd);
    return u * k * j1_over_rho(k, rho) * r_te(k) * std::exp(-u * depth);
  };
  auto normal = [&](double u) {
    const double k = std::sqrt(u * u + kd * kd);
    return k * k * numerics::bessel_j(0, k * rho) * r_te(k) * std::exp(-u * depth);
  };
  const double scale = 1.0 / depth;
  Complex lat = numerics::detail::semi_infinite<Complex>(lateral, 0.0, scale, spec).value;
  Complex nor = numerics::detail::semi_infinite<Complex>(normal, 0.0, scale, spec).value;

  if (lower == LowerLimit::Zero && kd > 0.0) {
    // Propagating segment with k = k_d sin(theta), q~ = k_d cos(theta).
    auto lat_prop = [&](double theta) {
      const double k = kd * std::sin(theta);
      const double qd = kd * std::cos(theta);
      return qd * k * k * j1_over_rho(k, rho) * r_te(k) * std::exp(I * qd * depth);
    };
    auto nor_prop = [&](double theta) {
      const double k = kd * std::sin(theta);
      const double qd = kd * std::cos(theta);
      return I * k * k * k * numerics::bessel_j(0, k * rho) * r_te(k) * std::exp(I * qd * depth);
    };
    numerics::QuadratureSpec prop_spec = spec;
    prop_spec.abs_tol = 0.0;
    lat += numerics::detail::finite<Complex>(lat_prop, 0.0, 0.5 * pi, prop_spec).value;
    nor += numerics::detail::finite<Complex>(nor_prop, 0.0, 0.5 * pi, prop_spec).value;
  }

  FieldSample out;
  out.reflected.x = cfg.m0 * pt.x * lat;
  out.reflected.y = cfg.m0 * pt.y * lat;
  out.reflected.z = cfg.m0 * nor;
  return out;
}

FieldSample reflected_field(const DipoleConfig& cfg, const FieldPoint& pt, const MaterialModel& model,
                            const numerics::QuadratureSpec& spec, LowerLimit lower) {
  model.validate();
  cfg.validate();
  if (model.kind == ResponseModel::Nonlocal) {
    auto r = [&](double k) { return r_te(model, cfg.omega_d, k, spec); };
    return reflected_field(cfg, pt, r, spec, lower);
  }
  const Complex eps = eps_real_axis(model, cfg.omega_d);
  auto r = [&](double k) {
    return r_fresnel(Polarization::TE, WaveKinematics{cfg.omega_d, k}, eps);
  };
  return reflected_field(cfg, pt, r, spec, lower);
}

FieldSample total_field(const DipoleConfig& cfg, const FieldPoint& pt, const ReflectionFn& r_te,
                        const numerics::QuadratureSpec& spec) {
  FieldSample out = reflected_field(cfg, pt, r_te, spec);
  out.free_space = free_space_field(cfg, FieldPoint{pt.x, pt.y, pt.z - cfg.h}).free_space;
  return out;
}

FieldSample total_field(const DipoleConfig& cfg, const FieldPoint& pt, const MaterialModel& model,
                        const numerics::QuadratureSpec& spec) {
  FieldSample out = reflected_field(cfg, pt, model, spec);
  out.free_space = free_space_field(cfg, FieldPoint{pt.x, pt.y, pt.z - cfg.h}).free_space;
  return out;
}

FieldMagnitudes field_magnitudes(const FieldSample& sample) {
  const FieldVector t = sample.total();
  FieldMagnitudes out;
  out.total_mag = std::sqrt(std::norm(t.x) + std::norm(t.z));
  out.reflected_mag = std::sqrt(std::norm(sample.reflected.x) + std::norm(sample.reflected.z));
  out.ratio = out.total_mag > 0.0 ? out.reflected_mag / out.total_mag : 0.0;
  return out;
}

double coil_moment(int n_turns, double current, double radius) {
  if (n_turns <= 0 || !(current > 0.0) || !(radius > 0.0)) {
    throw std::invalid_argument("coil_moment needs positive turns, current and radius");
  }
  return pi * n_turns * current * radius * radius / speed_of_light;
}

double perfect_reflector_lateral_field(double m0, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be > 0");
  return 6.0 * m0 * x * h / std::pow(x * x + 4.0 * h * h, 2.5);
}

}  // namespace evanescent
