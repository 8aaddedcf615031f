// Command-line front end: figure reproduction, pressure tables, sweeps,
// zero-crossing searches and unit conversion. CSV goes to --out or stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evanescent/app/config.hpp"
#include "evanescent/app/crossings.hpp"
#include "evanescent/app/csv.hpp"
#include "evanescent/app/figures.hpp"
#include "evanescent/app/pressure_table.hpp"
#include "evanescent/app/units.hpp"
#include "evanescent/errors.hpp"

namespace app = evanescent::app;

namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

const std::vector<Flag> kFlags = {
    {"--material", "material", "material preset: Cu or Si-B"},
    {"--omega-p", "omega_p", "plasma frequency override, rad/s"},
    {"--gamma", "gamma", "relaxation rate override, rad/s"},
    {"--v-fermi", "v_fermi", "Fermi velocity, cm/s"},
    {"--model", "model", "drude, plasma, nonlocal, comma list or all"},
    {"--height", "height", "dipole height h, cm"},
    {"--z", "z", "observation height, cm (default h)"},
    {"--m0", "m0", "dipole moment, erg/Oe"},
    {"--freq", "freq", "oscillation frequencies, rad/s, comma separated"},
    {"--x", "x", "lateral positions, cm, comma separated"},
    {"--grid", "grid", "sweep grid min:max:count[:log|lin]"},
    {"--axis", "axis", "sweep axis: x or omega"},
    {"--separation", "separation_um", "plate separations, micrometres"},
    {"--temperature", "temperature", "temperatures, K"},
    {"--units", "units", "Oe, T, A/m or erg/cm3, Pa"},
    {"--out", "out", "output CSV path (stdout when omitted)"},
    {"--rel-tol", "rel_tol", "quadrature relative tolerance"},
    {"--abs-tol", "abs_tol", "quadrature absolute tolerance"},
    {"--threads", "threads", "worker threads"},
};

struct Layer {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_flags(CLI::App* cmd, Layer& layer) {
  cmd->add_option("--config", layer.config_path, "key=value settings file");
  for (const auto& f : kFlags) cmd->add_option(f.name, layer.values[f.key], f.help);
}

app::Settings collect(CLI::App* cmd, const Layer& layer) {
  app::Settings settings;
  if (!layer.config_path.empty()) settings = app::load_settings_file(layer.config_path);
  app::Settings overrides;
  for (const auto& f : kFlags) {
    if (cmd->count(f.name) > 0) overrides[f.key] = layer.values.at(f.key);
  }
  app::merge_settings(settings, overrides);
  return settings;
}

void emit(const app::CsvTable& table, const app::RunConfig& cfg) {
  if (cfg.out.empty()) {
    app::write_csv(std::cout, table);
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw std::invalid_argument("cannot write '" + cfg.out + "'");
  app::write_csv(out, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Evanescent-wave Casimir pressures and dipole fields above metal plates"};
  cli.require_subcommand(1);

  Layer figure_layer, pressure_layer, sweep_layer, crossing_layer;
  std::string figure_id;
  auto* figure = cli.add_subcommand("figure", "emit the data behind a figure (fig2..fig7b)");
  figure->add_option("id", figure_id, "figure id")->required();
  add_flags(figure, figure_layer);

  auto* pressure = cli.add_subcommand("pressure", "Casimir pressure table over (a, T)");
  add_flags(pressure, pressure_layer);

  auto* sweep = cli.add_subcommand("sweep", "field components over x or omega");
  add_flags(sweep, sweep_layer);

  std::string quantity;
  auto* crossings = cli.add_subcommand("crossings", "zero crossings of a field quantity");
  crossings->add_option("quantity", quantity,
                        "im_hz, re_hz, im_hx, re_hx, re_hz_reflected, htilde_vs_plasma")
      ->required();
  add_flags(crossings, crossing_layer);

  double value = 0.0;
  std::string from_unit, to_unit;
  auto* convert = cli.add_subcommand("convert", "convert between Gaussian and SI units");
  convert->add_option("value", value)->required();
  convert->add_option("from", from_unit)->required();
  convert->add_option("to", to_unit)->required();

  CLI11_PARSE(cli, argc, argv);

  try {
    if (*convert) {
      std::printf("%s %s\n", app::format_number(app::convert_units(value, from_unit, to_unit)).c_str(),
                  to_unit.c_str());
      return 0;
    }
    CLI::App* active = nullptr;
    Layer* layer = nullptr;
    if (*figure) { active = figure; layer = &figure_layer; }
    if (*pressure) { active = pressure; layer = &pressure_layer; }
    if (*sweep) { active = sweep; layer = &sweep_layer; }
    if (*crossings) { active = crossings; layer = &crossing_layer; }

    const app::Settings settings = collect(active, *layer);
    const app::RunConfig cfg = app::build_config(settings);
    if (*figure) emit(app::run_figure(app::parse_figure_id(figure_id), cfg, settings), cfg);
    if (*pressure) emit(app::run_pressure_table(cfg, settings), cfg);
    if (*sweep) emit(app::run_sweep(cfg, settings), cfg);
    if (*crossings) {
      emit(app::crossings_table(cfg, settings, app::parse_crossing_quantity(quantity)), cfg);
    }
  } catch (const evanescent::NumericalError& e) {
    std::cerr << "numerical failure (" << evanescent::to_string(e.kind()) << "): " << e.what()
              << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
