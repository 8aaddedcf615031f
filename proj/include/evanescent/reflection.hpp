#pragma once

#include <complex>
#include <functional>

#include "evanescent/materials.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent {

enum class Polarization { TE, TM };

// Square root on the decaying branch: Im >= 0, and Re >= 0 when Im == 0.
Complex decaying_sqrt(Complex z);

// Real-frequency kinematics. q~ = sqrt(k0^2 - k_perp^2) on the decaying branch,
// q = -i q~ (so q~ = i q, and q is real and >= 0 for evanescent waves).
struct WaveKinematics {
  double omega = 0.0;
  double k_perp = 0.0;

  double k0() const;
  Complex q_tilde() const;
  Complex q() const;
  Complex p_tilde(Complex eps) const;
  Complex p(Complex eps) const;
};

// Imaginary-frequency coefficients of the Lifshitz formula.
double r_matsubara(Polarization pol, double xi, double k_perp, double eps);

Complex r_fresnel(Polarization pol, const WaveKinematics& kin, Complex eps);

// The same Fresnel expression continued to omega = i xi, i.e. k0^2 = -(xi/c)^2.
Complex r_fresnel_imaginary_axis(Polarization pol, double xi, double k_perp, Complex eps);

// Analytic omega -> 0 limits: Drude TM = 1, TE = 0; plasma TM = 1,
// TE = (c k - sqrt(c^2 k^2 + wp^2)) / (c k + sqrt(c^2 k^2 + wp^2)).
double r_zero_frequency(Polarization pol, const MaterialModel& model, double k_perp);

// (q Z + i k0) / (q Z - i k0)
Complex r_te_from_impedance(const WaveKinematics& kin, Complex z_te);

// Local surface impedance k0 / p~, the contour value of the impedance
// integral for a wave-vector independent permittivity.
Complex local_impedance(const WaveKinematics& kin, Complex eps);

// TE impedance in the specular-reflection approximation,
//   Z = (i k0 / pi) int dk_z / (k0^2 eps(omega, k) - k_perp^2 - k_z^2),
// for an arbitrary eps(k) at fixed omega.
Complex z_te_impedance(const std::function<Complex(double)>& eps_of_k, double omega,
                       double k_perp, const numerics::QuadratureSpec& spec = {});

// Same with the nonlocal transverse permittivity of `params`.
Complex z_te_impedance(const MaterialParams& params, double omega, double k_perp,
                       const numerics::QuadratureSpec& spec = {});

// TE reflection for any model: Fresnel for Drude/plasma, impedance for nonlocal.
Complex r_te(const MaterialModel& model, double omega, double k_perp,
             const numerics::QuadratureSpec& spec = {});

// Surface impedance for any model; local ones use k0 / p~.
Complex surface_impedance(const MaterialModel& model, double omega, double k_perp,
                          const numerics::QuadratureSpec& spec = {});

struct DriveParameters {
  Complex K;       // [eps(omega_d) - 1] omega_d^2 / omega_h^2, Drude permittivity
  double K_mag;    // |K|
  double Omega;    // gamma omega_h^2 / omega_p^2
  double omega_h;  // c / h
};

DriveParameters drive_parameters(const MaterialParams& params, double omega_d, double h);

// TE coefficient in the reduced variable w = h sqrt(k_perp^2 - k_d^2):
// (w - sqrt(w^2 - K)) / (w + sqrt(w^2 - K)).
Complex r_te_reduced(Complex K, double w);

}  // namespace evanescent
