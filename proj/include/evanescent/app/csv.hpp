#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "evanescent/app/config.hpp"

namespace evanescent::app {

inline constexpr const char* kToolVersion = "0.1.0";

using Cell = std::variant<std::string, double>;

struct CsvTable {
  std::vector<std::string> comments;  // written as "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  // Column index by name; throws when absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

// Scientific notation with 9 significant digits.
std::string format_number(double value);

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv(const CsvTable& table);

// Provenance header: tool version, command, material, models, tolerances,
// units and the settings fingerprint.
std::vector<std::string> provenance(const std::string& command, const RunConfig& cfg,
                                    const Settings& settings);

}  // namespace evanescent::app
