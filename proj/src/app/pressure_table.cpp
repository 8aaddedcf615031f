#include "evanescent/app/pressure_table.hpp"

#include <stdexcept>

#include "evanescent/app/parallel.hpp"
#include "evanescent/app/units.hpp"
#include "evanescent/casimir.hpp"

namespace evanescent::app {

namespace {

struct Row {
  PressureBreakdown matsubara;
  PressureBreakdown split;
  double zero_frequency = 0.0;
  double analytic = 0.0;
};

}  // namespace

CsvTable run_pressure_table(const RunConfig& cfg, const Settings& settings) {
  if (cfg.separations_um.empty()) {
    throw std::invalid_argument("pressure table needs at least one separation (separation_um)");
  }
  const std::string unit = cfg.units.empty() ? "erg/cm3" : cfg.units;
  if (unit_quantity(unit) != Quantity::Pressure) {
    throw std::invalid_argument("pressure output needs erg/cm3 or Pa, got '" + unit + "'");
  }
  const auto temperatures = cfg.temperatures.empty() ? std::vector<double>{300.0} : cfg.temperatures;
  std::vector<ResponseModel> models = cfg.models;
  if (models.empty()) models = {ResponseModel::Drude, ResponseModel::Plasma};
  for (const auto m : models) {
    if (m == ResponseModel::Nonlocal) {
      throw std::invalid_argument("pressure table supports the drude and plasma models only");
    }
  }

  struct Task {
    double a_um;
    double T;
    ResponseModel kind;
  };
  std::vector<Task> tasks;
  for (const double a : cfg.separations_um) {
    for (const double T : temperatures) {
      for (const auto m : models) tasks.push_back({a, T, m});
    }
  }
  const auto rows = parallel_map<Row>(
      tasks.size(),
      [&](std::size_t i) {
        const PlateGeometry geom{tasks[i].a_um * 1e-4, tasks[i].T};
        const MaterialModel model = make_model(tasks[i].kind, cfg.params);
        Row r;
        r.matsubara = pressure_matsubara(geom, model, cfg.quadrature);
        r.split = pressure_split_large_sep(geom, model, cfg.quadrature);
        r.zero_frequency = pressure_zero_frequency_term(geom, model, cfg.quadrature);
        r.analytic = pressure_analytic_large_sep(geom, tasks[i].kind);
        return r;
      },
      cfg.threads);

  CsvTable table;
  table.comments = provenance("pressure", cfg, settings);
  table.comments.push_back("pressure unit " + unit +
                           "; propagating columns are the analytic large-separation limits");
  table.columns = {"model", "a_um", "T_K", "matsubara_total", "zero_frequency_term",
                   "analytic_large_sep", "prop_te", "prop_tm", "evan_te", "evan_tm",
                   "split_total", "evan_te_over_total"};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& r = rows[i];
    for (const auto& w : r.split.warnings) {
      table.comments.push_back("warning a=" + format_number(t.a_um) + " um T=" +
                               format_number(t.T) + " K: " + w);
    }
    auto u = [&](double v) { return convert_units(v, "erg/cm3", unit); };
    table.add_row({std::string(to_string(t.kind)), t.a_um, t.T, u(r.matsubara.total),
                   u(r.zero_frequency), u(r.analytic), u(r.split.prop_te), u(r.split.prop_tm),
                   u(r.split.evan_te), u(r.split.evan_tm), u(r.split.total),
                   r.split.evan_te / r.matsubara.total});
  }
  return table;
}

}  // namespace evanescent::app
