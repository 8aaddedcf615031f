#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "evanescent/casimir.hpp"
#include "evanescent/constants.hpp"

using namespace evanescent;
using namespace evanescent::constants;

namespace {

const MaterialParams kCu = material_preset("Cu");
const MaterialModel kDrude = make_model(ResponseModel::Drude, kCu);
const MaterialModel kPlasma = make_model(ResponseModel::Plasma, kCu);

PlateGeometry at_um(double a_um, double T = 300.0) { return PlateGeometry{a_um * 1e-4, T}; }

// -(kB T / 2 pi) int dk k^2 r^2 e^{-2ak} / (1 - r^2 e^{-2ak}) with r = 1, summed
// as the polylog series: -(kB T / 8 pi a^3) zeta(3).
double drude_zero_frequency_oracle(const PlateGeometry& g) {
  double sum = 0.0;
  for (int n = 1; n < 200000; ++n) sum += 1.0 / (static_cast<double>(n) * n * n);
  sum += 1.0 / (2.0 * 200000.0 * 200000.0);
  return -boltzmann * g.T * sum / (8.0 * pi * g.a * g.a * g.a);
}

}  // namespace

TEST_CASE("geometry validation and reference scales") {
  CHECK_THROWS_AS(PlateGeometry({0.0, 300.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(PlateGeometry({1e-3, -1.0}).validate(), std::invalid_argument);
  const auto g = at_um(10.0);
  CHECK(thermal_pressure_unit(g) == doctest::Approx(boltzmann * 300.0 * zeta3 / (8.0 * pi * 1e-9)));
  CHECK(large_separation_temperature(1e-3) ==
        doctest::Approx(hbar * speed_of_light / (2.0 * 1e-3 * boltzmann)));
}

TEST_CASE("analytic large-separation pressures") {
  const auto g = at_um(10.0);
  const double x = thermal_pressure_unit(g);
  CHECK(pressure_analytic_large_sep(g, ResponseModel::Drude) == doctest::Approx(-x).epsilon(1e-15));
  CHECK(pressure_analytic_large_sep(g, ResponseModel::Plasma) ==
        doctest::Approx(2.0 * pressure_analytic_large_sep(g, ResponseModel::Drude)).epsilon(1e-15));
  CHECK(pressure_analytic_large_sep(at_um(20.0), ResponseModel::Drude) ==
        doctest::Approx(pressure_analytic_large_sep(g, ResponseModel::Drude) / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(pressure_analytic_large_sep(g, ResponseModel::Nonlocal), std::invalid_argument);
}

TEST_CASE("zero-frequency term") {
  const auto g = at_um(10.0);
  CHECK(pressure_zero_frequency_term(g, [](double) { return 0.0; }, [](double) { return 0.0; }) ==
        0.0);
  const double oracle = drude_zero_frequency_oracle(g);
  CHECK(pressure_zero_frequency_term(g, kDrude) == doctest::Approx(oracle).epsilon(1e-6));
  // Plasma: finite omega_p keeps |r_TE| below one, so the magnitude falls short of 2x.
  const double plasma = pressure_zero_frequency_term(g, kPlasma);
  CHECK(plasma > 2.0 * oracle);
  CHECK(plasma == doctest::Approx(2.0 * oracle).epsilon(1e-2));
  CHECK_THROWS_AS(pressure_zero_frequency_term(g, make_model(ResponseModel::Nonlocal, kCu)),
                  std::invalid_argument);
}

TEST_CASE("Matsubara pressure at 10 um, 300 K") {
  const auto g = at_um(10.0);
  const double x = thermal_pressure_unit(g);
  const auto drude = pressure_matsubara(g, kDrude);
  const auto plasma = pressure_matsubara(g, kPlasma);
  CHECK(drude.representation == Representation::Matsubara);
  CHECK_FALSE(drude.split_available);
  CHECK(drude.prop_te == 0.0);
  CHECK(drude.evan_te == 0.0);
  CHECK(drude.total == doctest::Approx(drude.te_total + drude.tm_total).epsilon(1e-14));
  CHECK(drude.total == doctest::Approx(-x).epsilon(1e-2));
  CHECK(plasma.total == doctest::Approx(-2.0 * x).epsilon(1e-2));
  CHECK(drude.total / plasma.total == doctest::Approx(0.5).epsilon(1e-2));
  // l >= 1 terms are small: the sum sits close to its zero-frequency term.
  CHECK(plasma.total ==
        doctest::Approx(pressure_zero_frequency_term(g, kPlasma)).epsilon(5e-3));
}

TEST_CASE("l >= 1 terms are exponentially small at 15 um") {
  const auto g = at_um(15.0);
  for (const auto& model : {kDrude, kPlasma}) {
    const double full = pressure_matsubara(g, model).total;
    const double zero = pressure_zero_frequency_term(g, model);
    CAPTURE(to_string(model.kind));
    CHECK(std::abs(full - zero) < 5e-3 * std::abs(full));
  }
}

TEST_CASE("attraction and monotonicity in a") {
  for (const auto& model : {kDrude, kPlasma}) {
    double previous = INFINITY;
    for (double a_um : {2.0, 4.0, 7.0, 10.0, 15.0, 25.0}) {
      const double p = pressure_matsubara(at_um(a_um), model).total;
      CHECK(p < 0.0);
      CHECK(std::abs(p) < previous);
      previous = std::abs(p);
    }
  }
}

TEST_CASE("real-frequency split at 8 um, Drude") {
  const auto g = at_um(8.0);
  const double x = thermal_pressure_unit(g);
  const auto split = pressure_split_large_sep(g, kDrude);
  CHECK(split.representation == Representation::RealFrequency);
  CHECK(split.split_available);
  CHECK(split.evan_te == doctest::Approx(x).epsilon(2e-2));
  CHECK(split.evan_te > 0.0);
  CHECK(split.prop_te == doctest::Approx(-x).epsilon(1e-15));
  CHECK(split.prop_tm == doctest::Approx(-x).epsilon(1e-15));
  CHECK(std::abs(split.evan_tm) < 0.05 * std::abs(split.evan_te));
  CHECK(split.total == doctest::Approx(split.prop_te + split.prop_tm + split.evan_te + split.evan_tm));
}

TEST_CASE("plasma evanescent parts vanish identically") {
  const auto split = pressure_split_large_sep(at_um(8.0), kPlasma);
  CHECK(split.evan_te == 0.0);
  CHECK(split.evan_tm == 0.0);
  CHECK(split.total == doctest::Approx(-2.0 * thermal_pressure_unit(at_um(8.0))));
}

TEST_CASE("Drude TE cancellation at 8, 10 and 12 um") {
  for (double a_um : {8.0, 10.0, 12.0}) {
    const auto split = pressure_split_large_sep(at_um(a_um), kDrude);
    CAPTURE(a_um);
    CHECK(std::abs(split.prop_te + split.evan_te) < 2e-2 * std::abs(split.prop_te));
  }
}

TEST_CASE("frequency window sensitivity") {
  const auto g = at_um(10.0);
  const auto w = default_frequency_window(g, kCu);
  const double wc = speed_of_light / (2.0 * g.a);
  CHECK(w.omega_max == doctest::Approx(1e3 * wc));
  CHECK(w.omega_min == doctest::Approx(1e-4 * kCu.gamma * wc * wc / (kCu.omega_p * kCu.omega_p)));
  const double base = pressure_split_large_sep(g, kDrude, w.omega_min, w.omega_max).evan_te;
  const double wider = pressure_split_large_sep(g, kDrude, 0.5 * w.omega_min, 2.0 * w.omega_max).evan_te;
  const double narrower = pressure_split_large_sep(g, kDrude, 2.0 * w.omega_min, 0.5 * w.omega_max).evan_te;
  CHECK(std::abs(wider - base) < 1e-3 * std::abs(base));
  CHECK(std::abs(narrower - base) < 1e-3 * std::abs(base));
  CHECK_THROWS_AS(pressure_split_large_sep(g, kDrude, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("representation consistency at 30 um") {
  const auto g = at_um(30.0);
  for (const auto& model : {kDrude, kPlasma}) {
    const double real_freq = pressure_split_large_sep(g, model).total;
    const double matsubara = pressure_matsubara(g, model).total;
    CAPTURE(to_string(model.kind));
    CHECK(real_freq == doctest::Approx(matsubara).epsilon(2e-2));
  }
}

TEST_CASE("large-separation warning outside the regime") {
  const auto near = pressure_split_large_sep(PlateGeometry{1e-4, 300.0}, kDrude);
  CHECK_FALSE(near.warnings.empty());
  const auto far = pressure_split_large_sep(at_um(10.0), kDrude);
  CHECK(far.warnings.empty());
}
