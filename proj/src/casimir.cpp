#include "evanescent/casimir.hpp"

#include <cmath>
#include <utility>
#include <sstream>
#include <stdexcept>

#include "evanescent/constants.hpp"
#include "evanescent/numerics/adaptive.hpp"
#include "evanescent/reflection.hpp"

namespace evanescent {

namespace {

using namespace constants;

// r^2 E / (1 - r^2 E) with E = exp(-x); the denominator is assembled from
// 1 - r and 1 + r so that |r| -> 1 at small x keeps full precision.
template <class T>
T round_trip(T r, T one_minus_r, T one_plus_r, double x) {
  const double e = std::exp(-x);
  const T den = one_minus_r * one_plus_r + r * r * (-std::expm1(-x));
  return r * r * e / den;
}

void check_model(const MaterialModel& model) {
  model.validate();
  if (model.kind == ResponseModel::Nonlocal) {
    throw std::invalid_argument("Casimir pressure is available for the Drude and plasma models only");
  }
}

// Dimensionless l >= 1 integrand at x = 2 a q; returns the TE + TM kernel parts.
struct MatsubaraKernel {
  double a;
  double kx2;       // (xi/c)^2
  double eps_minus; // eps(i xi) - 1

  std::pair<double, double> operator()(double x) const {
    const double q = x / (2.0 * a);
    const double p = std::sqrt(q * q + eps_minus * kx2);
    const double eps = 1.0 + eps_minus;
    const double sum_te = q + p;
    const double r_te = -eps_minus * kx2 / (sum_te * sum_te);
    const double te = round_trip(r_te, 2.0 * p / sum_te, 2.0 * q / sum_te, x);
    const double sum_tm = eps * q + p;
    const double r_tm = (eps * q - p) / sum_tm;
    const double tm = round_trip(r_tm, 2.0 * p / sum_tm, 2.0 * eps * q / sum_tm, x);
    return {x * x * te, x * x * tm};
  }
};

}  // namespace

void PlateGeometry::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("separation a must be > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("temperature T must be > 0");
}

const char* to_string(Representation rep) {
  switch (rep) {
    case Representation::Matsubara:
      return "matsubara";
    case Representation::RealFrequency:
      return "real-frequency";
    case Representation::AnalyticLargeSep:
      return "analytic-large-separation";
  }
  return "unknown";
}

double thermal_pressure_unit(const PlateGeometry& geom) {
  geom.validate();
  return boltzmann * geom.T * zeta3 / (8.0 * pi * geom.a * geom.a * geom.a);
}

double large_separation_temperature(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("separation a must be > 0");
  return hbar * speed_of_light / (2.0 * a * boltzmann);
}

double pressure_zero_frequency_term(const PlateGeometry& geom,
                                    const std::function<double(double)>& r_te,
                                    const std::function<double(double)>& r_tm,
                                    const numerics::QuadratureSpec& spec) {
  geom.validate();
  spec.validate();
  const double two_a = 2.0 * geom.a;
  auto integrand = [&](double x) {
    if (x == 0.0) return 0.0;
    const double k = x / two_a;
    double sum = 0.0;
    for (const double r : {r_te(k), r_tm(k)}) {
      sum += round_trip(r, 1.0 - r, 1.0 + r, x);
    }
    return x * x * sum;
  };
  const double integral =
      numerics::detail::semi_infinite<double>(integrand, 0.0, 1.0, spec).value;
  return -boltzmann * geom.T / (2.0 * pi) * integral / (two_a * two_a * two_a);
}

double pressure_zero_frequency_term(const PlateGeometry& geom, const MaterialModel& model,
                                    const numerics::QuadratureSpec& spec) {
  check_model(model);
  auto r_te = [&](double k) { return r_zero_frequency(Polarization::TE, model, k); };
  auto r_tm = [&](double k) { return r_zero_frequency(Polarization::TM, model, k); };
  return pressure_zero_frequency_term(geom, r_te, r_tm, spec);
}

PressureBreakdown pressure_matsubara(const PlateGeometry& geom, const MaterialModel& model,
                                     const numerics::QuadratureSpec& spec) {
  geom.validate();
  check_model(model);
  spec.validate();
  const double two_a = 2.0 * geom.a;
  const double xi1 = 2.0 * pi * boltzmann * geom.T / hbar;

  // Per-polarization terms; l = 0 via the analytic limits.
  auto term = [&](int l, bool te) -> double {
    if (l == 0) {
      auto integrand = [&](double x) {
        if (x == 0.0) return 0.0;
        const Polarization pol = te ? Polarization::TE : Polarization::TM;
        const double r = r_zero_frequency(pol, model, x / two_a);
        return x * x * round_trip(r, 1.0 - r, 1.0 + r, x);
      };
      return numerics::detail::semi_infinite<double>(integrand, 0.0, 1.0, spec).value;
    }
    const double xi = xi1 * l;
    const double kx = xi / speed_of_light;
    const MatsubaraKernel kernel{geom.a, kx * kx, eps_imaginary_axis(model, xi) - 1.0};
    auto integrand = [&](double x) {
      const auto [t, m] = kernel(x);
      return te ? t : m;
    };
    return numerics::detail::semi_infinite<double>(integrand, two_a * kx, 1.0, spec).value;
  };

  const double prefactor = -boltzmann * geom.T / pi / (two_a * two_a * two_a);
  PressureBreakdown out;
  out.representation = Representation::Matsubara;
  out.split_available = false;
  out.te_total = prefactor * numerics::matsubara_sum([&](int l) { return term(l, true); },
                                                     spec.rel_tol);
  out.tm_total = prefactor * numerics::matsubara_sum([&](int l) { return term(l, false); },
                                                     spec.rel_tol);
  out.total = out.te_total + out.tm_total;
  return out;
}

FrequencyWindow default_frequency_window(const PlateGeometry& geom, const MaterialParams& params) {
  geom.validate();
  params.validate();
  const double omega_c = speed_of_light / (2.0 * geom.a);
  const double gamma = params.gamma > 0.0 ? params.gamma : omega_c;
  return FrequencyWindow{1e-4 * gamma * omega_c * omega_c / (params.omega_p * params.omega_p),
                         1e3 * omega_c};
}

PressureBreakdown pressure_split_large_sep(const PlateGeometry& geom, const MaterialModel& model,
                                           double omega_min, double omega_max,
                                           const numerics::QuadratureSpec& spec) {
  geom.validate();
  check_model(model);
  spec.validate();
  if (!(omega_min > 0.0) || !(omega_max > omega_min)) {
    throw std::invalid_argument("frequency window needs 0 < omega_min < omega_max");
  }
  const double two_a = 2.0 * geom.a;

  // Imaginary part of the round-trip factor integrated over x = 2 a q.
  auto evanescent_kernel = [&](double omega, bool te) {
    const Complex eps = eps_real_axis(model, omega);
    const double k0 = omega / speed_of_light;
    auto integrand = [&](double x) {
      if (x == 0.0) return 0.0;
      const double q = x / two_a;
      const Complex qt(0.0, q);  // q~ = i q
      const Complex pt = decaying_sqrt((eps - 1.0) * (k0 * k0) - q * q);
      Complex value;
      if (te) {
        const Complex sum = qt + pt;
        value = round_trip((qt - pt) / sum, 2.0 * pt / sum, 2.0 * qt / sum, x);
      } else {
        const Complex sum = eps * qt + pt;
        value = round_trip((eps * qt - pt) / sum, 2.0 * pt / sum, 2.0 * eps * qt / sum, x);
      }
      return x * x * value.imag();
    };
    return numerics::detail::semi_infinite<double>(integrand, 0.0, 1.0, spec).value /
           (two_a * two_a * two_a);
  };

  const double prefactor = -boltzmann * geom.T / (pi * pi);
  PressureBreakdown out;
  out.representation = Representation::RealFrequency;
  out.split_available = true;
  out.evan_te = prefactor * numerics::integrate_log_frequency(
                                [&](double w) { return evanescent_kernel(w, true) / w; },
                                omega_min, omega_max, spec);
  out.evan_tm = prefactor * numerics::integrate_log_frequency(
                                [&](double w) { return evanescent_kernel(w, false) / w; },
                                omega_min, omega_max, spec);
  const double unit = thermal_pressure_unit(geom);
  out.prop_te = -unit;
  out.prop_tm = -unit;
  out.te_total = out.prop_te + out.evan_te;
  out.tm_total = out.prop_tm + out.evan_tm;
  out.total = out.te_total + out.tm_total;

  const double t_large = large_separation_temperature(geom.a);
  if (geom.T < 1.5 * t_large) {
    std::ostringstream os;
    os << "outside the large-separation regime: T = " << geom.T << " K is not well above "
       << t_large << " K; analytic propagating limits are unreliable";
    out.warnings.push_back(os.str());
  }
  return out;
}

PressureBreakdown pressure_split_large_sep(const PlateGeometry& geom, const MaterialModel& model,
                                           const numerics::QuadratureSpec& spec) {
  const FrequencyWindow w = default_frequency_window(geom, model.params);
  return pressure_split_large_sep(geom, model, w.omega_min, w.omega_max, spec);
}

double pressure_analytic_large_sep(const PlateGeometry& geom, ResponseModel kind) {
  const double unit = thermal_pressure_unit(geom);
  switch (kind) {
    case ResponseModel::Drude:
      return -unit;
    case ResponseModel::Plasma:
      return -2.0 * unit;
    case ResponseModel::Nonlocal:
      break;
  }
  throw std::invalid_argument("analytic large-separation pressure needs Drude or plasma");
}

}  // namespace evanescent
