#pragma once

#include <string>
#include <vector>

#include "evanescent/app/config.hpp"
#include "evanescent/app/csv.hpp"

namespace evanescent::app {

enum class CrossingQuantity { ImHz, ReHz, ImHx, ReHx, ReHzReflected, HtildeVsPlasma };

CrossingQuantity parse_crossing_quantity(const std::string& text);
const char* to_string(CrossingQuantity q);

struct Crossing {
  double axis_value = 0.0;
  // +1 when the quantity goes from positive to negative along the axis.
  int direction = 0;
};

// The swept quantity at one axis value. The sweep axis is omega (position
// from cfg.positions[0]) or x (frequency from cfg.frequencies[0]); fields
// are normalised to m0 = 1. The model is cfg.models[0], Drude by default.
double crossing_quantity(const RunConfig& cfg, CrossingQuantity q, double axis_value);

// Sign changes on the grid, refined by bisection to 1e-4 relative in the
// axis value. Throws NumericalError(NoCrossing) when there are none.
std::vector<Crossing> find_zero_crossings(const RunConfig& cfg, CrossingQuantity q);

CsvTable crossings_table(const RunConfig& cfg, const Settings& settings, CrossingQuantity q);

}  // namespace evanescent::app
