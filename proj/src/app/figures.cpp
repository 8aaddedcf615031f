#include "evanescent/app/figures.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "evanescent/app/parallel.hpp"
#include "evanescent/app/units.hpp"

namespace evanescent::app {

namespace {

struct Task {
  ResponseModel kind;
  double omega;
  double x;
};

bool over_omega(FigureId id) {
  return id == FigureId::Fig6a || id == FigureId::Fig6b || id == FigureId::Fig7a ||
         id == FigureId::Fig7b;
}

Grid default_grid(FigureId id) {
  if (over_omega(id)) return Grid{0.1, 1000.0, 41, true};
  return Grid{0.5, 8.0, 31, false};
}

std::string field_units(const RunConfig& cfg) {
  const std::string unit = cfg.units.empty() ? "Oe" : cfg.units;
  if (unit_quantity(unit) != Quantity::MagneticField) {
    throw std::invalid_argument("figure output needs a field unit (Oe, T, A/m), got '" + unit + "'");
  }
  return unit;
}

std::vector<FieldSample> evaluate(const RunConfig& cfg, const std::vector<Task>& tasks, double m0) {
  return parallel_map<FieldSample>(
      tasks.size(),
      [&](std::size_t i) { return field_at(cfg, tasks[i].kind, tasks[i].omega, tasks[i].x, m0); },
      cfg.threads);
}

}  // namespace

FigureId parse_figure_id(const std::string& text) {
  if (text == "fig2") return FigureId::Fig2;
  if (text == "fig3") return FigureId::Fig3;
  if (text == "fig4") return FigureId::Fig4;
  if (text == "fig5") return FigureId::Fig5;
  if (text == "fig6a") return FigureId::Fig6a;
  if (text == "fig6b") return FigureId::Fig6b;
  if (text == "fig7a") return FigureId::Fig7a;
  if (text == "fig7b") return FigureId::Fig7b;
  throw std::invalid_argument("unknown figure id '" + text + "'");
}

const char* to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
    case FigureId::Fig6a: return "fig6a";
    case FigureId::Fig6b: return "fig6b";
    case FigureId::Fig7a: return "fig7a";
    case FigureId::Fig7b: return "fig7b";
  }
  return "unknown";
}

double default_coil_moment() { return coil_moment(10, 3e9, 0.1); }

std::vector<double> default_frequencies(FigureId id) {
  switch (id) {
    case FigureId::Fig4: return {100.0};
    case FigureId::Fig5: return {0.2, 100.0};
    default: return {0.2, 2.0, 10.0, 20.0, 100.0};
  }
}

std::vector<double> default_positions(FigureId id) {
  switch (id) {
    case FigureId::Fig6a:
    case FigureId::Fig6b: return {1.0, 2.0, 3.0};
    case FigureId::Fig7a:
    case FigureId::Fig7b: return {3.0, 4.0, 5.0};
    default: return {};
  }
}

std::vector<ResponseModel> selected_models(const RunConfig& cfg, std::vector<std::string>* notes) {
  if (!cfg.models.empty()) return cfg.models;
  std::vector<ResponseModel> out = {ResponseModel::Drude, ResponseModel::Plasma};
  if (cfg.params.v_fermi) {
    out.push_back(ResponseModel::Nonlocal);
  } else if (notes) {
    notes->push_back("nonlocal model skipped: material '" + cfg.material + "' has no v_fermi");
  }
  return out;
}

FieldSample field_at(const RunConfig& cfg, ResponseModel kind, double omega_d, double x, double m0) {
  const DipoleConfig dipole{m0, cfg.height, omega_d};
  const MaterialModel model = make_model(kind, cfg.params);
  return total_field(dipole, FieldPoint{x, 0.0, cfg.observation_height()}, model, cfg.quadrature);
}

CsvTable run_figure(FigureId id, const RunConfig& cfg, const Settings& settings) {
  CsvTable table;
  table.comments = provenance(std::string("figure ") + to_string(id), cfg, settings);
  std::vector<std::string> notes;
  const auto models = selected_models(cfg, &notes);
  for (const auto& n : notes) table.comments.push_back(n);

  const Grid grid = cfg.grid ? *cfg.grid : default_grid(id);
  const auto axis = grid.points();
  std::vector<Task> tasks;

  if (!over_omega(id)) {
    // Normalised fields H / m0 (cm^-3) against x.
    const auto freqs = cfg.frequencies.empty() ? default_frequencies(id) : cfg.frequencies;
    for (const auto kind : models) {
      for (const double w : freqs) {
        for (const double x : axis) tasks.push_back({kind, w, x});
      }
    }
    const auto samples = evaluate(cfg, tasks, 1.0);
    table.comments.push_back("fields normalised to m0, units cm^-3; z = " +
                             format_number(cfg.observation_height()) + " cm, h = " +
                             format_number(cfg.height) + " cm");
    switch (id) {
      case FigureId::Fig2:
        table.columns = {"model", "omega_d_rad_s", "x_cm", "abs_re_hx_over_m0"};
        break;
      case FigureId::Fig3:
        table.columns = {"model", "omega_d_rad_s", "x_cm", "im_hx_over_m0"};
        break;
      case FigureId::Fig4:
        table.columns = {"model", "omega_d_rad_s", "x_cm", "abs_re_hz_over_m0",
                         "abs_re_hz_free_over_m0", "re_hz_reflected_to_free"};
        break;
      default:
        table.columns = {"model", "omega_d_rad_s", "x_cm", "htilde_over_m0",
                         "reflected_to_total"};
        break;
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const auto& t = tasks[i];
      const auto& s = samples[i];
      std::vector<Cell> row = {std::string(to_string(t.kind)), t.omega, t.x};
      switch (id) {
        case FigureId::Fig2:
          row.push_back(std::abs(s.h_x().real()));
          break;
        case FigureId::Fig3:
          row.push_back(s.h_x().imag());
          break;
        case FigureId::Fig4:
          row.push_back(std::abs(s.h_z().real()));
          row.push_back(std::abs(s.free_space.z.real()));
          row.push_back(s.reflected.z.real() / s.free_space.z.real());
          break;
        default: {
          const auto mags = field_magnitudes(s);
          row.push_back(mags.total_mag);
          row.push_back(mags.ratio);
          break;
        }
      }
      table.add_row(std::move(row));
    }
    return table;
  }

  // Absolute fields against omega for the coil moment.
  const double m0 = cfg.m0 ? *cfg.m0 : default_coil_moment();
  const std::string unit = field_units(cfg);
  const auto positions = cfg.positions.empty() ? default_positions(id) : cfg.positions;
  for (const auto kind : models) {
    for (const double x : positions) {
      for (const double w : axis) tasks.push_back({kind, w, x});
    }
  }
  const auto samples = evaluate(cfg, tasks, m0);
  table.comments.push_back("m0 = " + format_number(m0) + " erg/Oe; field unit " + unit);
  const char* name = "abs_re_hx";
  if (id == FigureId::Fig6b) name = "im_hx";
  if (id == FigureId::Fig7a) name = "abs_re_hz";
  if (id == FigureId::Fig7b) name = "im_hz";
  table.columns = {"model", "x_cm", "omega_d_rad_s", name};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& s = samples[i];
    double v = 0.0;
    switch (id) {
      case FigureId::Fig6a: v = std::abs(s.h_x().real()); break;
      case FigureId::Fig6b: v = s.h_x().imag(); break;
      case FigureId::Fig7a: v = std::abs(s.h_z().real()); break;
      default: v = s.h_z().imag(); break;
    }
    table.add_row({std::string(to_string(t.kind)), t.x, t.omega, convert_units(v, "Oe", unit)});
  }
  return table;
}

CsvTable run_sweep(const RunConfig& cfg, const Settings& settings) {
  if (!cfg.grid) throw std::invalid_argument("sweep needs a grid");
  const std::string axis_name = cfg.axis.empty() ? "x" : cfg.axis;
  const std::string unit = field_units(cfg);
  const double m0 = cfg.m0 ? *cfg.m0 : default_coil_moment();
  const auto axis = cfg.grid->points();
  CsvTable table;
  table.comments = provenance("sweep", cfg, settings);
  std::vector<std::string> notes;
  const auto models = selected_models(cfg, &notes);
  for (const auto& n : notes) table.comments.push_back(n);
  table.comments.push_back("m0 = " + format_number(m0) + " erg/Oe; field unit " + unit +
                           "; z = " + format_number(cfg.observation_height()) + " cm");

  std::vector<Task> tasks;
  if (axis_name == "x") {
    if (cfg.frequencies.empty()) throw std::invalid_argument("x sweep needs --freq");
    for (const auto kind : models) {
      for (const double w : cfg.frequencies) {
        for (const double x : axis) tasks.push_back({kind, w, x});
      }
    }
  } else {
    if (cfg.positions.empty()) throw std::invalid_argument("omega sweep needs --x");
    for (const auto kind : models) {
      for (const double x : cfg.positions) {
        for (const double w : axis) tasks.push_back({kind, w, x});
      }
    }
  }
  const auto samples = evaluate(cfg, tasks, m0);
  table.columns = {"model", "omega_d_rad_s", "x_cm", "re_hx", "im_hx", "re_hz", "im_hz",
                   "re_hx_reflected", "im_hx_reflected", "re_hz_reflected", "im_hz_reflected",
                   "total_magnitude", "reflected_magnitude"};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& s = samples[i];
    const auto mags = field_magnitudes(s);
    auto u = [&](double v) { return convert_units(v, "Oe", unit); };
    table.add_row({std::string(to_string(t.kind)), t.omega, t.x, u(s.h_x().real()),
                   u(s.h_x().imag()), u(s.h_z().real()), u(s.h_z().imag()),
                   u(s.reflected.x.real()), u(s.reflected.x.imag()), u(s.reflected.z.real()),
                   u(s.reflected.z.imag()), u(mags.total_mag), u(mags.reflected_mag)});
  }
  return table;
}

}  // namespace evanescent::app
