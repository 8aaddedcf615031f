#pragma once

#include <complex>
#include <optional>
#include <string>

namespace evanescent {

using Complex = std::complex<double>;

enum class ResponseModel { Drude, Plasma, Nonlocal };

const char* to_string(ResponseModel kind);
ResponseModel parse_response_model(const std::string& name);

// Gaussian units: frequencies in rad/s, velocities in cm/s.
struct MaterialParams {
  double omega_p = 0.0;
  double gamma = 0.0;
  std::optional<double> v_fermi;
  double v_tr_factor = 1.5;

  void validate() const;
  // v^Tr = v_tr_factor * v_fermi; throws when v_fermi is unset.
  double v_transverse() const;
};

struct MaterialModel {
  ResponseModel kind = ResponseModel::Drude;
  MaterialParams params;

  void validate() const;
};

// "Cu" or "Si-B".
MaterialParams material_preset(const std::string& name);
MaterialModel make_model(ResponseModel kind, const MaterialParams& params);

Complex eps_real_axis(const MaterialModel& model, double omega);
double eps_imaginary_axis(const MaterialModel& model, double xi);

struct NonlocalPermittivity {
  Complex value;
  // false where Im value < 0, i.e. beyond k = gamma / v^Tr
  bool passive = true;
};

NonlocalPermittivity eps_transverse_nonlocal(const MaterialParams& params, double omega,
                                             double k);

}  // namespace evanescent
