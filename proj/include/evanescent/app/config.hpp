#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evanescent/materials.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent::app {

// Flat key=value settings. Later layers override earlier ones.
using Settings = std::map<std::string, std::string>;

// '#' starts a comment; blank lines are ignored.
Settings parse_settings(const std::string& text);
Settings load_settings_file(const std::string& path);
void merge_settings(Settings& base, const Settings& overrides);

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log = false;

  void validate() const;
  std::vector<double> points() const;
};

// "min:max:count" with an optional ":log" or ":lin" suffix.
Grid parse_grid(const std::string& text);
std::vector<double> parse_list(const std::string& text);

struct RunConfig {
  std::string material = "Cu";
  MaterialParams params;
  // Empty means "all three" where a command supports it.
  std::vector<ResponseModel> models;
  double height = 1.0;                 // cm
  std::optional<double> z;             // cm, defaults to height
  std::optional<double> m0;            // erg/Oe
  std::vector<double> frequencies;     // rad/s
  std::vector<double> positions;       // x, cm
  std::optional<Grid> grid;
  std::string axis;                    // "x" or "omega"
  std::vector<double> separations_um;  // plate separations
  std::vector<double> temperatures;    // K
  std::string units;
  std::string out;
  std::string quantity;
  numerics::QuadratureSpec quadrature;
  int threads = 1;

  double observation_height() const { return z ? *z : height; }
};

// Builds a validated configuration. Recognised keys: material, omega_p,
// gamma, v_fermi, v_tr_factor, model, height, z, m0, freq, x, grid, axis,
// separation_um, temperature, units, out, quantity, rel_tol, abs_tol,
// max_subdivisions, tail_decades, threads.
RunConfig build_config(const Settings& settings);

// Canonical text of the effective settings and its FNV-1a 64-bit hash.
std::string canonical_settings(const Settings& settings);
std::string fingerprint(const Settings& settings);

}  // namespace evanescent::app
