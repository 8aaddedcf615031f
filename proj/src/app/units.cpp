#include "evanescent/app/units.hpp"

#include <stdexcept>

#include "evanescent/constants.hpp"

namespace evanescent::app {

namespace {

// Factor taking one `unit` to the native Gaussian unit (Oe or erg/cm^3).
double to_native(const std::string& unit) {
  if (unit == "Oe" || unit == "erg/cm3") return 1.0;
  if (unit == "T") return 1.0 / constants::tesla_per_oersted;
  if (unit == "A/m") return 1.0 / constants::amp_per_meter_per_oersted;
  if (unit == "Pa") return 1.0 / constants::pascal_per_erg_cm3;
  throw std::invalid_argument("unknown unit '" + unit + "'");
}

}  // namespace

Quantity unit_quantity(const std::string& unit) {
  if (unit == "Oe" || unit == "T" || unit == "A/m") return Quantity::MagneticField;
  if (unit == "erg/cm3" || unit == "Pa") return Quantity::Pressure;
  throw std::invalid_argument("unknown unit '" + unit + "'");
}

bool is_known_unit(const std::string& unit) {
  try {
    unit_quantity(unit);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

double convert_units(double value, const std::string& from, const std::string& to) {
  if (unit_quantity(from) != unit_quantity(to)) {
    throw std::invalid_argument("cannot convert '" + from + "' to '" + to + "'");
  }
  if (from == to) return value;
  return value * to_native(from) / to_native(to);
}

}  // namespace evanescent::app
