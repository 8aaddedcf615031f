#include "evanescent/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "evanescent/constants.hpp"
#include "evanescent/errors.hpp"

namespace evanescent {

namespace {

using constants::speed_of_light;

Complex fresnel(Polarization pol, Complex q_tilde, Complex p_tilde, Complex eps) {
  const Complex num = pol == Polarization::TE ? q_tilde - p_tilde : eps * q_tilde - p_tilde;
  const Complex den = pol == Polarization::TE ? q_tilde + p_tilde : eps * q_tilde + p_tilde;
  if (den == 0.0) {
    throw NumericalError(ErrorKind::DegenerateDenominator, "Fresnel denominator vanishes");
  }
  return num / den;
}

void check_wave(double omega, double k_perp) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be > 0");
  if (!(k_perp >= 0.0) || !std::isfinite(k_perp)) {
    throw std::invalid_argument("k_perp must be >= 0");
  }
}

}  // namespace

Complex decaying_sqrt(Complex z) {
  // Normalise signed zeros so the principal root lands on a definite side.
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  Complex s = std::sqrt(z);
  if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) s = -s;
  return s;
}

double WaveKinematics::k0() const { return omega / speed_of_light; }

Complex WaveKinematics::q_tilde() const {
  const double k = k0();
  return decaying_sqrt(Complex((k - k_perp) * (k + k_perp), 0.0));
}

Complex WaveKinematics::q() const { return Complex(0.0, -1.0) * q_tilde(); }

Complex WaveKinematics::p_tilde(Complex eps) const {
  const double k = k0();
  return decaying_sqrt(eps * (k * k) - k_perp * k_perp);
}

Complex WaveKinematics::p(Complex eps) const { return Complex(0.0, -1.0) * p_tilde(eps); }

double r_matsubara(Polarization pol, double xi, double k_perp, double eps) {
  if (!(xi > 0.0) || !(k_perp > 0.0)) {
    throw std::invalid_argument("r_matsubara needs xi > 0 and k_perp > 0");
  }
  if (!(eps >= 1.0)) throw std::invalid_argument("r_matsubara needs eps >= 1");
  const double kx = xi / speed_of_light;
  const double q = std::sqrt(k_perp * k_perp + kx * kx);
  if (std::isinf(eps)) return pol == Polarization::TE ? -1.0 : 1.0;
  const double p = std::sqrt(k_perp * k_perp + eps * kx * kx);
  return pol == Polarization::TE ? (q - p) / (q + p) : (eps * q - p) / (eps * q + p);
}

Complex r_fresnel(Polarization pol, const WaveKinematics& kin, Complex eps) {
  check_wave(kin.omega, kin.k_perp);
  return fresnel(pol, kin.q_tilde(), kin.p_tilde(eps), eps);
}

Complex r_fresnel_imaginary_axis(Polarization pol, double xi, double k_perp, Complex eps) {
  check_wave(xi, k_perp);
  const double kx = xi / speed_of_light;
  const Complex k0sq(-kx * kx, 0.0);
  const Complex q_tilde = decaying_sqrt(k0sq - k_perp * k_perp);
  const Complex p_tilde = decaying_sqrt(eps * k0sq - k_perp * k_perp);
  return fresnel(pol, q_tilde, p_tilde, eps);
}

double r_zero_frequency(Polarization pol, const MaterialModel& model, double k_perp) {
  model.params.validate();
  if (!(k_perp > 0.0)) throw std::invalid_argument("zero-frequency limit needs k_perp > 0");
  if (pol == Polarization::TM) return 1.0;
  switch (model.kind) {
    case ResponseModel::Drude:
      return 0.0;
    case ResponseModel::Plasma: {
      const double ck = speed_of_light * k_perp;
      const double wp = model.params.omega_p;
      const double root = std::sqrt(ck * ck + wp * wp);
      // (ck - root)/(ck + root) without the cancellation
      return -(wp * wp) / ((ck + root) * (ck + root));
    }
    case ResponseModel::Nonlocal:
      break;
  }
  throw std::invalid_argument("zero-frequency limit not available for the nonlocal model");
}

Complex r_te_from_impedance(const WaveKinematics& kin, Complex z_te) {
  const Complex q = kin.q();
  const Complex ik0(0.0, kin.k0());
  if (q == 0.0 && kin.k0() == 0.0) {
    throw std::invalid_argument("r_te_from_impedance needs q != 0 or k0 != 0");
  }
  const Complex num = q * z_te + ik0;
  const Complex den = q * z_te - ik0;
  const double scale = std::abs(q * z_te) + kin.k0();
  if (std::abs(den) <= 1e-14 * scale) {
    throw NumericalError(ErrorKind::DegenerateDenominator,
                         "impedance reflection denominator q Z - i k0 vanishes");
  }
  return num / den;
}

Complex local_impedance(const WaveKinematics& kin, Complex eps) {
  check_wave(kin.omega, kin.k_perp);
  const Complex p_tilde = kin.p_tilde(eps);
  if (p_tilde == 0.0) {
    throw NumericalError(ErrorKind::DegenerateDenominator, "p~ vanishes in local impedance");
  }
  return kin.k0() / p_tilde;
}

Complex r_te(const MaterialModel& model, double omega, double k_perp,
             const numerics::QuadratureSpec& spec) {
  const WaveKinematics kin{omega, k_perp};
  if (model.kind == ResponseModel::Nonlocal) {
    return r_te_from_impedance(kin, z_te_impedance(model.params, omega, k_perp, spec));
  }
  return r_fresnel(Polarization::TE, kin, eps_real_axis(model, omega));
}

Complex surface_impedance(const MaterialModel& model, double omega, double k_perp,
                          const numerics::QuadratureSpec& spec) {
  if (model.kind == ResponseModel::Nonlocal) {
    return z_te_impedance(model.params, omega, k_perp, spec);
  }
  return local_impedance(WaveKinematics{omega, k_perp}, eps_real_axis(model, omega));
}

DriveParameters drive_parameters(const MaterialParams& params, double omega_d, double h) {
  params.validate();
  if (!(omega_d > 0.0) || !(h > 0.0)) {
    throw std::invalid_argument("drive_parameters needs omega_d > 0 and h > 0");
  }
  const double omega_h = speed_of_light / h;
  const Complex eps = eps_real_axis(MaterialModel{ResponseModel::Drude, params}, omega_d);
  const Complex K = (eps - 1.0) * (omega_d * omega_d) / (omega_h * omega_h);
  const double Omega = params.gamma * omega_h * omega_h / (params.omega_p * params.omega_p);
  return DriveParameters{K, std::abs(K), Omega, omega_h};
}

Complex r_te_reduced(Complex K, double w) {
  if (!(w > 0.0)) throw std::invalid_argument("r_te_reduced needs w > 0");
  // sqrt(w^2 - K) with Re >= 0, matching p = -i p~ on the decaying branch
  Complex root = std::sqrt(Complex(w * w) - K);
  if (root.real() < 0.0) root = -root;
  return (w - root) / (w + root);
}

}  // namespace evanescent
