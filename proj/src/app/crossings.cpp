#include "evanescent/app/crossings.hpp"

#include <cmath>
#include <stdexcept>

#include "evanescent/app/figures.hpp"
#include "evanescent/app/parallel.hpp"
#include "evanescent/errors.hpp"

namespace evanescent::app {

namespace {

constexpr double kAxisTolerance = 1e-4;

std::string axis_of(const RunConfig& cfg, CrossingQuantity q) {
  if (!cfg.axis.empty()) return cfg.axis;
  return q == CrossingQuantity::HtildeVsPlasma ? "x" : "omega";
}

Grid grid_of(const RunConfig& cfg, const std::string& axis) {
  if (cfg.grid) return *cfg.grid;
  return axis == "x" ? Grid{0.5, 8.0, 31, false} : Grid{1.0, 1000.0, 61, true};
}

ResponseModel model_of(const RunConfig& cfg) {
  return cfg.models.empty() ? ResponseModel::Drude : cfg.models.front();
}

}  // namespace

CrossingQuantity parse_crossing_quantity(const std::string& text) {
  if (text == "im_hz") return CrossingQuantity::ImHz;
  if (text == "re_hz") return CrossingQuantity::ReHz;
  if (text == "im_hx") return CrossingQuantity::ImHx;
  if (text == "re_hx") return CrossingQuantity::ReHx;
  if (text == "re_hz_reflected") return CrossingQuantity::ReHzReflected;
  if (text == "htilde_vs_plasma") return CrossingQuantity::HtildeVsPlasma;
  throw std::invalid_argument("unknown crossing quantity '" + text + "'");
}

const char* to_string(CrossingQuantity q) {
  switch (q) {
    case CrossingQuantity::ImHz: return "im_hz";
    case CrossingQuantity::ReHz: return "re_hz";
    case CrossingQuantity::ImHx: return "im_hx";
    case CrossingQuantity::ReHx: return "re_hx";
    case CrossingQuantity::ReHzReflected: return "re_hz_reflected";
    case CrossingQuantity::HtildeVsPlasma: return "htilde_vs_plasma";
  }
  return "unknown";
}

double crossing_quantity(const RunConfig& cfg, CrossingQuantity q, double axis_value) {
  const std::string axis = axis_of(cfg, q);
  double omega = 0.0;
  double x = 0.0;
  if (axis == "omega") {
    if (cfg.positions.empty()) throw std::invalid_argument("omega sweep needs a position x");
    omega = axis_value;
    x = cfg.positions.front();
  } else {
    if (cfg.frequencies.empty()) throw std::invalid_argument("x sweep needs a frequency");
    omega = cfg.frequencies.front();
    x = axis_value;
  }
  const ResponseModel kind = model_of(cfg);
  const FieldSample s = field_at(cfg, kind, omega, x, 1.0);
  switch (q) {
    case CrossingQuantity::ImHz: return s.h_z().imag();
    case CrossingQuantity::ReHz: return s.h_z().real();
    case CrossingQuantity::ImHx: return s.h_x().imag();
    case CrossingQuantity::ReHx: return s.h_x().real();
    case CrossingQuantity::ReHzReflected: return s.reflected.z.real();
    case CrossingQuantity::HtildeVsPlasma: {
      const FieldSample p = field_at(cfg, ResponseModel::Plasma, omega, x, 1.0);
      return field_magnitudes(s).total_mag - field_magnitudes(p).total_mag;
    }
  }
  return 0.0;
}

std::vector<Crossing> find_zero_crossings(const RunConfig& cfg, CrossingQuantity q) {
  const auto points = grid_of(cfg, axis_of(cfg, q)).points();
  const auto values = parallel_map<double>(
      points.size(), [&](std::size_t i) { return crossing_quantity(cfg, q, points[i]); },
      cfg.threads);

  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double a = points[i];
    double b = points[i + 1];
    double fa = values[i];
    const double fb = values[i + 1];
    if (fa == 0.0) {
      out.push_back({a, 0});
      continue;
    }
    if ((fa > 0.0) == (fb > 0.0) || fb == 0.0) continue;
    const int direction = fa > 0.0 ? 1 : -1;
    while (std::abs(b - a) > kAxisTolerance * 0.5 * std::abs(a + b)) {
      const double mid = 0.5 * (a + b);
      const double fm = crossing_quantity(cfg, q, mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm > 0.0) == (fa > 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    out.push_back({0.5 * (a + b), direction});
  }
  if (!values.empty() && values.back() == 0.0) out.push_back({points.back(), 0});
  if (out.empty()) {
    throw NumericalError(ErrorKind::NoCrossing,
                         std::string("no zero crossing of ") + to_string(q) + " on the sweep grid");
  }
  return out;
}

CsvTable crossings_table(const RunConfig& cfg, const Settings& settings, CrossingQuantity q) {
  const auto crossings = find_zero_crossings(cfg, q);
  CsvTable table;
  table.comments = provenance(std::string("crossings ") + to_string(q), cfg, settings);
  const std::string axis = axis_of(cfg, q);
  table.comments.push_back("axis: " + axis + (axis == "x" ? " (cm)" : " (rad/s)"));
  table.columns = {"quantity", "model", axis == "x" ? "x_cm" : "omega_d_rad_s", "direction"};
  for (const auto& c : crossings) {
    table.add_row({std::string(to_string(q)), std::string(to_string(model_of(cfg))), c.axis_value,
                   std::to_string(c.direction)});
  }
  return table;
}

}  // namespace evanescent::app
