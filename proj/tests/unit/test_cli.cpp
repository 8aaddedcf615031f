#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "evanescent/app/config.hpp"
#include "evanescent/app/crossings.hpp"
#include "evanescent/app/csv.hpp"
#include "evanescent/app/figures.hpp"
#include "evanescent/app/parallel.hpp"
#include "evanescent/app/pressure_table.hpp"
#include "evanescent/app/units.hpp"
#include "evanescent/constants.hpp"
#include "evanescent/errors.hpp"

using namespace evanescent;
using namespace evanescent::app;

TEST_CASE("unit conversion") {
  CHECK(convert_units(3.36e-3, "Oe", "T") == doctest::Approx(3.36e-7).epsilon(1e-15));
  CHECK(convert_units(3.36e-3, "Oe", "A/m") == doctest::Approx(0.267380304).epsilon(1e-8));
  CHECK(convert_units(3.36e-4, "Oe", "A/m") == doctest::Approx(0.027).epsilon(1e-2));
  CHECK(convert_units(1.0, "erg/cm3", "Pa") == doctest::Approx(0.1));
  CHECK(convert_units(convert_units(2.5, "T", "A/m"), "A/m", "T") == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(convert_units(4.2, "Pa", "Pa") == 4.2);
  CHECK(unit_quantity("T") == Quantity::MagneticField);
  CHECK(unit_quantity("Pa") == Quantity::Pressure);
  CHECK_FALSE(is_known_unit("gauss"));
  CHECK_THROWS_AS(convert_units(1.0, "Oe", "Pa"), std::invalid_argument);
  CHECK_THROWS_AS(convert_units(1.0, "Oe", "mT"), std::invalid_argument);
}

TEST_CASE("settings text") {
  const auto s = parse_settings("# comment\nmaterial = Si-B\n\n  freq=1,2 # trailing\nheight=2\n");
  CHECK(s.at("material") == "Si-B");
  CHECK(s.at("freq") == "1,2");
  CHECK(s.at("height") == "2");
  CHECK_THROWS_AS(parse_settings("no equals sign"), std::invalid_argument);
  CHECK_THROWS_AS(parse_settings("=3"), std::invalid_argument);
  CHECK_THROWS_AS(load_settings_file("/nonexistent/config.ini"), std::invalid_argument);
}

TEST_CASE("command-line settings override the file") {
  Settings base = parse_settings("material=Cu\nheight=1\nmodel=drude\n");
  merge_settings(base, Settings{{"height", "2.5"}, {"model", "plasma,drude"}});
  const RunConfig cfg = build_config(base);
  CHECK(cfg.height == 2.5);
  CHECK(cfg.observation_height() == 2.5);
  REQUIRE(cfg.models.size() == 2);
  CHECK(cfg.models[0] == ResponseModel::Plasma);
  CHECK(cfg.params.omega_p == 1.12e16);
}

TEST_CASE("build_config") {
  const RunConfig cfg = build_config(Settings{{"material", "Si-B"},
                                              {"gamma", "2e14"},
                                              {"freq", "0.2,2,10"},
                                              {"x", "1"},
                                              {"z", "1.5"},
                                              {"rel_tol", "1e-8"},
                                              {"units", "T"},
                                              {"threads", "2"}});
  CHECK(cfg.params.omega_p == 7e14);
  CHECK(cfg.params.gamma == 2e14);
  CHECK(cfg.frequencies.size() == 3);
  CHECK(cfg.observation_height() == 1.5);
  CHECK(cfg.quadrature.rel_tol == 1e-8);
  CHECK(cfg.units == "T");
  CHECK(cfg.threads == 2);
  CHECK_THROWS_AS(build_config(Settings{{"colour", "red"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"height", "-1"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"height", "abc"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"units", "furlong"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"material", "Si-B"}, {"model", "nonlocal"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"threads", "0"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_config(Settings{{"freq", "1,-2"}}), std::invalid_argument);
}

TEST_CASE("grids") {
  const Grid lin = parse_grid("1:3:5");
  CHECK_FALSE(lin.log);
  const auto p = lin.points();
  REQUIRE(p.size() == 5);
  CHECK(p.front() == 1.0);
  CHECK(p.back() == 3.0);
  CHECK(p[2] == doctest::Approx(2.0));
  const auto lg = parse_grid("1:1000:4:log").points();
  REQUIRE(lg.size() == 4);
  CHECK(lg[1] == doctest::Approx(10.0));
  CHECK(lg.back() == 1000.0);
  CHECK_THROWS_AS(parse_grid("1:3:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("3:1:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1:4:log"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:4:cubic"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2:2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_list(","), std::invalid_argument);
}

TEST_CASE("number formatting and CSV layout") {
  CHECK(format_number(3.36e-7) == "3.36000000e-07");
  CHECK(format_number(-1.0) == "-1.00000000e+00");
  CHECK(format_number(-0.0) == "0.00000000e+00");
  CsvTable t;
  t.comments = {"hello"};
  t.columns = {"a", "b"};
  t.add_row({std::string("x"), 2.0});
  CHECK(to_csv(t) == "# hello\na,b\nx,2.00000000e+00\n");
  CHECK(t.number(0, "b") == 2.0);
  CHECK_THROWS(t.column("c"));
  CHECK_THROWS(t.add_row({1.0}));
}

TEST_CASE("fingerprint ignores output-only settings") {
  const Settings a{{"material", "Cu"}, {"freq", "1"}};
  Settings b = a;
  b["out"] = "/tmp/x.csv";
  b["threads"] = "4";
  CHECK(fingerprint(a) == fingerprint(b));
  Settings c = a;
  c["freq"] = "2";
  CHECK(fingerprint(a) != fingerprint(c));
}

TEST_CASE("sweep CSV is deterministic and carries provenance") {
  const Settings settings{{"model", "plasma,drude"}, {"freq", "10"}, {"grid", "0.5:4:6"},
                          {"units", "T"}};
  RunConfig cfg = build_config(settings);
  const std::string first = to_csv(run_sweep(cfg, settings));
  cfg.threads = 3;
  const std::string second = to_csv(run_sweep(cfg, settings));
  CHECK(first == second);
  CHECK(first.find("# tool: evanescent " + std::string(kToolVersion)) != std::string::npos);
  CHECK(first.find("# fingerprint: fnv1a64:" + fingerprint(settings)) != std::string::npos);
  CHECK(first.find("model,omega_d_rad_s,x_cm,re_hx") != std::string::npos);
  const auto table = run_sweep(cfg, settings);
  CHECK(table.rows.size() == 12);
  // Plasma: reflected lateral field only, purely real.
  CHECK(table.number(0, "im_hx") == 0.0);
}

TEST_CASE("parallel_map keeps order and reports the first failure") {
  const auto v = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); }, 4);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  try {
    parallel_map<int>(
        10,
        [](std::size_t i) -> int {
          if (i == 3 || i == 7) throw std::runtime_error("fail " + std::to_string(i));
          return 0;
        },
        4);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "fail 3");
  }
}

TEST_CASE("figure ids and defaults") {
  CHECK(parse_figure_id("fig6a") == FigureId::Fig6a);
  CHECK(std::string(to_string(FigureId::Fig7b)) == "fig7b");
  CHECK_THROWS_AS(parse_figure_id("fig9"), std::invalid_argument);
  CHECK(default_coil_moment() == doctest::Approx(3.14e-2).epsilon(2e-3));
  CHECK(default_frequencies(FigureId::Fig2).size() == 5);
  std::vector<std::string> notes;
  const auto si = build_config(Settings{{"material", "Si-B"}});
  const auto models = selected_models(si, &notes);
  CHECK(models.size() == 2);
  CHECK_FALSE(notes.empty());
}

TEST_CASE("pressure table") {
  CHECK_THROWS_AS(run_pressure_table(build_config(Settings{}), Settings{}), std::invalid_argument);
  const Settings settings{{"separation_um", "10"}, {"temperature", "300"}};
  const auto table = run_pressure_table(build_config(settings), settings);
  REQUIRE(table.rows.size() == 2);
  CHECK(std::get<std::string>(table.rows[0][0]) == "drude");
  CHECK(table.number(0, "evan_te_over_total") == doctest::Approx(-1.0).epsilon(2e-2));
  CHECK(table.number(1, "evan_te") == 0.0);
  CHECK(table.number(1, "evan_tm") == 0.0);
  const double x = 1.380649e-16 * 300.0 * constants::zeta3 / (8.0 * constants::pi * 1e-9);
  CHECK(table.number(0, "analytic_large_sep") == doctest::Approx(-x));
  const Settings pa{{"separation_um", "10"}, {"model", "plasma"}, {"units", "Pa"}};
  const auto in_pa = run_pressure_table(build_config(pa), pa);
  CHECK(in_pa.number(0, "analytic_large_sep") == doctest::Approx(-0.2 * x));
  const Settings nonlocal{{"separation_um", "10"}, {"model", "nonlocal"}};
  CHECK_THROWS_AS(run_pressure_table(build_config(nonlocal), nonlocal), std::invalid_argument);
}

TEST_CASE("crossings") {
  CHECK(parse_crossing_quantity(to_string(CrossingQuantity::ImHz)) == CrossingQuantity::ImHz);
  CHECK_THROWS_AS(parse_crossing_quantity("phase"), std::invalid_argument);
  const Settings settings{{"x", "5"}, {"grid", "10:60:11"}, {"model", "drude"}};
  const auto found = find_zero_crossings(build_config(settings), CrossingQuantity::ImHz);
  REQUIRE(found.size() == 1);
  CHECK(found[0].axis_value == doctest::Approx(29.4).epsilon(5e-2));
  CHECK(found[0].direction == 1);
  const Settings none{{"x", "5"}, {"grid", "1:5:5"}, {"model", "drude"}};
  try {
    find_zero_crossings(build_config(none), CrossingQuantity::ImHz);
    FAIL("expected no crossing");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == ErrorKind::NoCrossing);
  }
}
