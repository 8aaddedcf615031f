#include "evanescent/app/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace evanescent::app {

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("CSV row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no CSV column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  return std::get<double>(rows.at(row).at(column(name)));
}

std::string format_number(double value) {
  char buf[40];
  // collapse -0 so identical results print identically
  std::snprintf(buf, sizeof buf, "%.8e", value == 0.0 ? 0.0 : value);
  return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        out << *s;
      } else {
        out << format_number(std::get<double>(row[i]));
      }
    }
    out << '\n';
  }
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

std::vector<std::string> provenance(const std::string& command, const RunConfig& cfg,
                                    const Settings& settings) {
  std::vector<std::string> out;
  out.push_back(std::string("tool: evanescent ") + kToolVersion);
  out.push_back("command: " + command);
  std::string material = "material: " + cfg.material + " omega_p=" +
                         format_number(cfg.params.omega_p) +
                         " gamma=" + format_number(cfg.params.gamma);
  material += " v_fermi=" + (cfg.params.v_fermi ? format_number(*cfg.params.v_fermi) : "unset");
  material += " v_tr_factor=" + format_number(cfg.params.v_tr_factor);
  out.push_back(material);
  std::string models = "models:";
  if (cfg.models.empty()) {
    models += " default";
  } else {
    for (const auto m : cfg.models) models += std::string(" ") + to_string(m);
  }
  out.push_back(models);
  out.push_back("quadrature: rel_tol=" + format_number(cfg.quadrature.rel_tol) +
                " abs_tol=" + format_number(cfg.quadrature.abs_tol) +
                " max_subdivisions=" + std::to_string(cfg.quadrature.max_subdivisions) +
                " tail_decades=" + std::to_string(cfg.quadrature.tail_decades));
  std::string effective;
  for (const auto& [k, v] : settings) {
    if (k == "out" || k == "threads") continue;
    effective += (effective.empty() ? "" : " ") + k + "=" + v;
  }
  out.push_back("settings: " + (effective.empty() ? std::string("(defaults)") : effective));
  out.push_back("fingerprint: fnv1a64:" + fingerprint(settings));
  return out;
}

}  // namespace evanescent::app
