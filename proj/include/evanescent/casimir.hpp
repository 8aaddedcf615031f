#pragma once

#include <functional>
#include <string>
#include <vector>

#include "evanescent/materials.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent {

// Separation a in cm, temperature T in K.
struct PlateGeometry {
  double a = 0.0;
  double T = 0.0;

  void validate() const;
};

enum class Representation { Matsubara, RealFrequency, AnalyticLargeSep };

const char* to_string(Representation rep);

// Pressures in erg/cm^3; negative means attraction.
struct PressureBreakdown {
  double total = 0.0;
  double prop_te = 0.0;
  double prop_tm = 0.0;
  double evan_te = 0.0;
  double evan_tm = 0.0;
  // Per-polarization totals; the only split available in the Matsubara form.
  double te_total = 0.0;
  double tm_total = 0.0;
  Representation representation = Representation::Matsubara;
  bool split_available = false;
  std::vector<std::string> warnings;
};

struct FrequencyWindow {
  double omega_min = 0.0;
  double omega_max = 0.0;
};

// k_B T zeta(3) / (8 pi a^3)
double thermal_pressure_unit(const PlateGeometry& geom);

// Temperature above which the geometry counts as large-separation, hbar c / (2 a k_B).
double large_separation_temperature(double a);

PressureBreakdown pressure_matsubara(const PlateGeometry& geom, const MaterialModel& model,
                                     const numerics::QuadratureSpec& spec = {});

double pressure_zero_frequency_term(const PlateGeometry& geom, const MaterialModel& model,
                                    const numerics::QuadratureSpec& spec = {});

// Same with arbitrary zero-frequency coefficients r(k_perp).
double pressure_zero_frequency_term(const PlateGeometry& geom,
                                    const std::function<double(double)>& r_te,
                                    const std::function<double(double)>& r_tm,
                                    const numerics::QuadratureSpec& spec = {});

FrequencyWindow default_frequency_window(const PlateGeometry& geom, const MaterialParams& params);

// Evanescent TE/TM pressure from the real-frequency integral; propagating
// parts from their analytic large-separation limits.
PressureBreakdown pressure_split_large_sep(const PlateGeometry& geom, const MaterialModel& model,
                                           double omega_min, double omega_max,
                                           const numerics::QuadratureSpec& spec = {});

PressureBreakdown pressure_split_large_sep(const PlateGeometry& geom, const MaterialModel& model,
                                           const numerics::QuadratureSpec& spec = {});

double pressure_analytic_large_sep(const PlateGeometry& geom, ResponseModel kind);

}  // namespace evanescent
