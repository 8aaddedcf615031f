#pragma once

#include <string>

namespace evanescent::app {

enum class Quantity { MagneticField, Pressure };

// Field units: "Oe", "T", "A/m". Pressure units: "erg/cm3", "Pa".
Quantity unit_quantity(const std::string& unit);
bool is_known_unit(const std::string& unit);

// Exact Gaussian <-> SI conversion; throws std::invalid_argument for unknown
// or incompatible units.
double convert_units(double value, const std::string& from, const std::string& to);

}  // namespace evanescent::app
