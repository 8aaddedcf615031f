#pragma once

#include <array>
#include <complex>
#include <functional>

#include "evanescent/materials.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent {

// Vertical magnetic dipole m0 (erg/Oe) at (0, 0, h) above the plate z = 0,
// oscillating at omega_d (rad/s).
struct DipoleConfig {
  double m0 = 0.0;
  double h = 0.0;
  double omega_d = 0.0;

  void validate() const;
  double k_d() const;
  // k_d r below `limit`, where the electric field is negligible.
  bool quasistationary(double r, double limit = 1e-3) const;
};

struct FieldPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double rho() const;
};

struct FieldVector {
  Complex x{};
  Complex y{};
  Complex z{};

  FieldVector& operator+=(const FieldVector& other);
};

FieldVector operator+(FieldVector lhs, const FieldVector& rhs);

// Magnetic field in Oe; the total is always free_space + reflected.
struct FieldSample {
  FieldVector free_space;
  FieldVector reflected;

  FieldVector total() const { return free_space + reflected; }
  Complex h_x() const { return free_space.x + reflected.x; }
  Complex h_y() const { return free_space.y + reflected.y; }
  Complex h_z() const { return free_space.z + reflected.z; }
};

struct FieldMagnitudes {
  double total_mag = 0.0;
  double reflected_mag = 0.0;
  double ratio = 0.0;
};

enum class LowerLimit {
  WaveNumber,  // integrate k_perp from k_d (evanescent waves only)
  Zero,        // include the propagating segment [0, k_d)
};

using ReflectionFn = std::function<Complex(double k_perp)>;

// Free dipole at the origin; `pt` is measured from the dipole.
FieldSample free_space_field(const DipoleConfig& cfg, const FieldPoint& pt);
FieldVector free_space_electric(const DipoleConfig& cfg, const FieldPoint& pt);

// Plane-wave amplitudes of the free dipole field at height z relative to it.
FieldVector fourier_component(const DipoleConfig& cfg, double k_x, double k_y, double z);

// Plane-wave amplitudes above the plate by the image construction,
// z measured from the plate.
FieldVector image_fourier_component(const DipoleConfig& cfg, double k_x, double k_y, double z,
                                    Complex r_te);

FieldSample reflected_field(const DipoleConfig& cfg, const FieldPoint& pt, const ReflectionFn& r_te,
                            const numerics::QuadratureSpec& spec = {},
                            LowerLimit lower = LowerLimit::WaveNumber);

FieldSample reflected_field(const DipoleConfig& cfg, const FieldPoint& pt, const MaterialModel& model,
                            const numerics::QuadratureSpec& spec = {},
                            LowerLimit lower = LowerLimit::WaveNumber);

FieldSample total_field(const DipoleConfig& cfg, const FieldPoint& pt, const MaterialModel& model,
                        const numerics::QuadratureSpec& spec = {});

FieldSample total_field(const DipoleConfig& cfg, const FieldPoint& pt, const ReflectionFn& r_te,
                        const numerics::QuadratureSpec& spec = {});

// sqrt(|H_x|^2 + |H_z|^2) of the total and reflected parts.
FieldMagnitudes field_magnitudes(const FieldSample& sample);

// m0 = pi N I0 R^2 / c with I0 in statA and R in cm.
double coil_moment(int n_turns, double current, double radius);

// Magnitude of the lateral field at (x, 0, h) for total reflection,
// 6 m0 x h / (x^2 + 4h^2)^(5/2). The field itself points along -x.
double perfect_reflector_lateral_field(double m0, double h, double x);

// Plane-wave amplitudes from the Green function of the impedance boundary
// problem, z measured from the plate.
FieldVector green_tensor_field(const DipoleConfig& cfg, double k_x, double k_y, double z,
                               Complex z_te);

FieldVector green_tensor_field(const DipoleConfig& cfg, double k_x, double k_y, double z,
                               const MaterialModel& model,
                               const numerics::QuadratureSpec& spec = {});

}  // namespace evanescent
