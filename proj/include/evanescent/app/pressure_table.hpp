#pragma once

#include "evanescent/app/config.hpp"
#include "evanescent/app/csv.hpp"

namespace evanescent::app {

// One row per (separation, temperature, model): Matsubara total, the
// zero-frequency term, the analytic large-separation value and the
// real-frequency split. Pressures in cfg.units (erg/cm3 by default).
CsvTable run_pressure_table(const RunConfig& cfg, const Settings& settings);

}  // namespace evanescent::app
