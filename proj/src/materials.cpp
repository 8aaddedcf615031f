#include "evanescent/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace evanescent {

const char* to_string(ResponseModel kind) {
  switch (kind) {
    case ResponseModel::Drude:
      return "drude";
    case ResponseModel::Plasma:
      return "plasma";
    case ResponseModel::Nonlocal:
      return "nonlocal";
  }
  return "unknown";
}

ResponseModel parse_response_model(const std::string& name) {
  if (name == "drude" || name == "Drude") return ResponseModel::Drude;
  if (name == "plasma" || name == "Plasma") return ResponseModel::Plasma;
  if (name == "nonlocal" || name == "Nonlocal") return ResponseModel::Nonlocal;
  throw std::invalid_argument("unknown response model '" + name + "'");
}

void MaterialParams::validate() const {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) {
    throw std::invalid_argument("omega_p must be positive");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gamma must be non-negative");
  }
  if (v_fermi && !(*v_fermi > 0.0)) throw std::invalid_argument("v_fermi must be positive");
  if (!(v_tr_factor > 0.0)) throw std::invalid_argument("v_tr_factor must be positive");
}

double MaterialParams::v_transverse() const {
  if (!v_fermi) throw std::invalid_argument("nonlocal response needs v_fermi");
  return v_tr_factor * *v_fermi;
}

void MaterialModel::validate() const {
  params.validate();
  if (kind == ResponseModel::Nonlocal && !params.v_fermi) {
    throw std::invalid_argument("nonlocal model needs v_fermi; the preset does not supply one");
  }
}

MaterialParams material_preset(const std::string& name) {
  if (name == "Cu" || name == "cu") return MaterialParams{1.12e16, 1.38e13, 1.6e8, 1.5};
  if (name == "Si-B" || name == "si-b" || name == "Si") {
    return MaterialParams{7.0e14, 1.5e14, std::nullopt, 1.5};
  }
  throw std::invalid_argument("unknown material preset '" + name + "'");
}

MaterialModel make_model(ResponseModel kind, const MaterialParams& params) {
  MaterialModel model{kind, params};
  model.validate();
  return model;
}

Complex eps_real_axis(const MaterialModel& model, double omega) {
  model.params.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("eps_real_axis needs omega > 0");
  const double wp2 = model.params.omega_p * model.params.omega_p;
  switch (model.kind) {
    case ResponseModel::Plasma:
      return Complex(1.0 - wp2 / (omega * omega), 0.0);
    case ResponseModel::Drude:
      return 1.0 - wp2 / (omega * Complex(omega, model.params.gamma));
    case ResponseModel::Nonlocal:
      break;
  }
  throw std::invalid_argument(
      "nonlocal permittivity depends on the wave vector; use eps_transverse_nonlocal");
}

double eps_imaginary_axis(const MaterialModel& model, double xi) {
  model.params.validate();
  if (!(xi > 0.0)) throw std::invalid_argument("eps_imaginary_axis needs xi > 0");
  const double wp2 = model.params.omega_p * model.params.omega_p;
  switch (model.kind) {
    case ResponseModel::Plasma:
      return 1.0 + wp2 / (xi * xi);
    case ResponseModel::Drude:
      return 1.0 + wp2 / (xi * (xi + model.params.gamma));
    case ResponseModel::Nonlocal:
      break;
  }
  throw std::invalid_argument("imaginary-axis permittivity not defined for the nonlocal model");
}

NonlocalPermittivity eps_transverse_nonlocal(const MaterialParams& params, double omega,
                                             double k) {
  params.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("eps_transverse_nonlocal needs omega > 0");
  if (!(k >= 0.0)) throw std::invalid_argument("eps_transverse_nonlocal needs k >= 0");
  const double wp2 = params.omega_p * params.omega_p;
  const Complex drude_part = wp2 / (omega * Complex(omega, params.gamma));
  const Complex value = 1.0 - drude_part * Complex(1.0, params.v_transverse() * k / omega);
  return NonlocalPermittivity{value, value.imag() >= 0.0};
}

}  // namespace evanescent
