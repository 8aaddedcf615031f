#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "evanescent/constants.hpp"
#include "evanescent/errors.hpp"
#include "evanescent/reflection.hpp"

using namespace evanescent;
using constants::speed_of_light;

namespace {

double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

const MaterialParams kCu = material_preset("Cu");

}  // namespace

TEST_CASE("decaying_sqrt branch") {
  CHECK(decaying_sqrt(Complex(4.0, 0.0)) == Complex(2.0, 0.0));
  CHECK(decaying_sqrt(Complex(-4.0, 0.0)) == Complex(0.0, 2.0));
  CHECK(decaying_sqrt(Complex(-4.0, -0.0)) == Complex(0.0, 2.0));
  const Complex s = decaying_sqrt(Complex(-1.0, -1e-3));
  CHECK(s.imag() > 0.0);
  CHECK(std::abs(s * s - Complex(-1.0, -1e-3)) < 1e-15);
}

TEST_CASE("wave kinematics") {
  const WaveKinematics evanescent_wave{100.0, 2.0};
  CHECK(evanescent_wave.q().real() == doctest::Approx(std::sqrt(4.0 - std::pow(100.0 / speed_of_light, 2))));
  CHECK(evanescent_wave.q().imag() == doctest::Approx(0.0));
  const WaveKinematics propagating{3e10, 0.5};
  CHECK(propagating.q_tilde().real() > 0.0);
  CHECK(propagating.q_tilde().imag() == 0.0);
}

TEST_CASE("r_matsubara ideal and trivial limits") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(r_matsubara(Polarization::TM, 1e14, 100.0, inf) == 1.0);
  CHECK(r_matsubara(Polarization::TE, 1e14, 100.0, inf) == -1.0);
  CHECK(r_matsubara(Polarization::TE, 1e14, 100.0, 1.0) == 0.0);
  CHECK(r_matsubara(Polarization::TM, 1e14, 100.0, 1.0) == 0.0);
  CHECK_THROWS_AS(r_matsubara(Polarization::TE, 0.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(r_matsubara(Polarization::TE, 1.0, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(r_matsubara(Polarization::TE, 1.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("r_matsubara against a 50-digit evaluation") {
  // First Matsubara frequency at 300 K, k_perp = 1/(2a) with a = 10 um, Drude Cu.
  const double xi = 2.4677902551530605401e14;
  const double k = 1.0 / (2.0 * 10e-4);
  const double eps = eps_imaginary_axis(make_model(ResponseModel::Drude, kCu), xi);
  CHECK(eps == doctest::Approx(1951.6903914803994897).epsilon(1e-14));
  CHECK(r_matsubara(Polarization::TE, xi, k, eps) ==
        doctest::Approx(-0.9556508666038689209328585).epsilon(1e-13));
  CHECK(r_matsubara(Polarization::TM, xi, k, eps) ==
        doctest::Approx(0.9558102066081620509373662).epsilon(1e-13));
}

TEST_CASE("r_matsubara stays inside (-1, 1)") {
  for (double xi = 1e12; xi < 1e17; xi *= 4.1) {
    for (double k = 1.0; k < 1e7; k *= 7.3) {
      for (double eps : {1.5, 30.0, 1e4, 1e8}) {
        CHECK(std::abs(r_matsubara(Polarization::TE, xi, k, eps)) < 1.0);
        CHECK(std::abs(r_matsubara(Polarization::TM, xi, k, eps)) < 1.0);
      }
    }
  }
}

TEST_CASE("r_fresnel trivial cases and zero-frequency limits") {
  CHECK(std::abs(r_fresnel(Polarization::TE, WaveKinematics{1e3, 5.0}, 1.0)) == 0.0);
  CHECK(std::abs(r_fresnel(Polarization::TM, WaveKinematics{1e15, 1e3}, 1.0)) == 0.0);

  const auto plasma = make_model(ResponseModel::Plasma, kCu);
  const auto drude = make_model(ResponseModel::Drude, kCu);
  const double k = 1e3;
  const double ck = speed_of_light * k;
  const double root = std::hypot(ck, kCu.omega_p);
  const double eq14 = (ck - root) / (ck + root);
  CHECK(r_zero_frequency(Polarization::TE, plasma, k) == doctest::Approx(eq14).epsilon(1e-12));
  CHECK(r_zero_frequency(Polarization::TE, drude, k) == 0.0);
  CHECK(r_zero_frequency(Polarization::TM, drude, k) == 1.0);
  CHECK(r_zero_frequency(Polarization::TM, plasma, k) == 1.0);

  // Approaching omega -> 0 along the real axis with k_perp >> k0.
  const WaveKinematics slow{1e-3, k};
  CHECK(r_fresnel(Polarization::TE, slow, eps_real_axis(plasma, 1e-3)).real() ==
        doctest::Approx(eq14).epsilon(1e-10));
  CHECK(std::abs(r_fresnel(Polarization::TE, slow, eps_real_axis(drude, 1e-3))) < 1e-6);
}

TEST_CASE("passivity: |r| <= 1 on a random grid with Im eps >= 0") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> log_w(-1.0, 17.0);
  std::uniform_real_distribution<double> log_k(-3.0, 7.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  const auto drude = make_model(ResponseModel::Drude, kCu);
  const auto drude_si = make_model(ResponseModel::Drude, material_preset("Si-B"));
  for (int i = 0; i < 2000; ++i) {
    const double w = std::pow(10.0, log_w(rng));
    const auto& model = i % 2 ? drude : drude_si;
    const Complex eps = eps_real_axis(model, w);
    REQUIRE(eps.imag() >= 0.0);
    const double k_te = std::pow(10.0, log_k(rng));
    CHECK(std::abs(r_fresnel(Polarization::TE, WaveKinematics{w, k_te}, eps)) <= 1.0);
    // TM beyond the light cone carries the surface-plasmon pole, so only
    // propagating waves are bounded.
    const double k_tm = frac(rng) * w / speed_of_light;
    CHECK(std::abs(r_fresnel(Polarization::TM, WaveKinematics{w, k_tm}, eps)) <= 1.0);
  }
}

TEST_CASE("plasma evanescent TE coefficient is real and in (-1, 0)") {
  const auto plasma = make_model(ResponseModel::Plasma, kCu);
  for (double w : {0.1, 10.0, 1e3, 1e9, 1e14}) {
    const double k0 = w / speed_of_light;
    for (double factor : {1.001, 2.0, 1e3, 1e8}) {
      const Complex r = r_te(plasma, w, factor * k0);
      CHECK(r.imag() == 0.0);
      CHECK(r.real() >= -1.0);
      CHECK(r.real() < 0.0);
    }
  }
}

TEST_CASE("imaginary-axis continuation matches r_matsubara") {
  const auto drude = make_model(ResponseModel::Drude, kCu);
  for (double xi = 1e11; xi < 1e17; xi *= 3.3) {
    const double eps = eps_imaginary_axis(drude, xi);
    for (double k = 10.0; k < 1e7; k *= 5.9) {
      for (auto pol : {Polarization::TE, Polarization::TM}) {
        const Complex r = r_fresnel_imaginary_axis(pol, xi, k, eps);
        CHECK(std::abs(r.imag()) < 1e-15);
        CHECK(r.real() == doctest::Approx(r_matsubara(pol, xi, k, eps)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("r_te_from_impedance limits") {
  const WaveKinematics kin{100.0, 3.0};
  CHECK(std::abs(r_te_from_impedance(kin, 0.0) + 1.0) < 1e-15);
  const Complex degenerate = Complex(0.0, kin.k0()) / kin.q();
  try {
    r_te_from_impedance(kin, degenerate);
    FAIL("expected a degenerate denominator");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateDenominator);
  }
}

TEST_CASE("impedance quadrature reproduces Fresnel in the local limit") {
  const auto drude = make_model(ResponseModel::Drude, kCu);
  double worst_z = 0.0;
  double worst_r = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double w = std::pow(10.0, -1.0 + 0.5 * i);
    const Complex eps = eps_real_axis(drude, w);
    for (int j = 0; j < 20; ++j) {
      const double k = std::pow(10.0, -2.0 + 0.4 * j);
      const WaveKinematics kin{w, k};
      if (k <= kin.k0()) continue;
      const Complex z = z_te_impedance([&](double) { return eps; }, w, k);
      const Complex z_local = local_impedance(kin, eps);
      worst_z = std::max(worst_z, rel_diff(z, z_local));
      // q Z + i k0 cancels when |r| ~ 1e-15; the floor is that roundoff
      const Complex fresnel = r_fresnel(Polarization::TE, kin, eps);
      const double err = std::abs(r_te_from_impedance(kin, z) - fresnel);
      const double allowed = 1e-8 * std::abs(fresnel) + 4.0 * std::numeric_limits<double>::epsilon();
      worst_r = std::max(worst_r, err / allowed);
    }
  }
  CAPTURE(worst_z);
  CAPTURE(worst_r);
  CHECK(worst_z < 1e-8);
  CHECK(worst_r <= 1.0);
}

TEST_CASE("impedance reports a pole on the contour for vacuum inside the light cone") {
  const double w = 3e10;  // k0 = 1.0007 cm^-1
  try {
    z_te_impedance([](double) { return Complex(1.0); }, w, 0.5);
    FAIL("expected a pole-on-contour diagnostic");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == ErrorKind::PoleOnContour);
  }
}

TEST_CASE("nonlocal impedance: passivity and the v^Tr -> 0 limit") {
  const Complex z = z_te_impedance(kCu, 100.0, 1.0);
  CHECK(std::isfinite(z.real()));
  CHECK(std::isfinite(z.imag()));
  CHECK(std::abs(r_te(make_model(ResponseModel::Nonlocal, kCu), 100.0, 1.0)) <= 1.0);

  MaterialParams slow = kCu;
  slow.v_fermi = 1e-4;
  const double w = 100.0;
  const WaveKinematics kin{w, 1.0};
  const Complex local =
      local_impedance(kin, eps_real_axis(make_model(ResponseModel::Drude, kCu), w));
  CHECK(rel_diff(z_te_impedance(slow, w, 1.0), local) < 1e-6);
}

TEST_CASE("drive parameters") {
  const auto cu = drive_parameters(kCu, 100.0, 1.0);
  CHECK(cu.Omega == doctest::Approx(98.87).epsilon(1e-3));
  CHECK(cu.omega_h == doctest::Approx(speed_of_light));
  const auto si = drive_parameters(material_preset("Si-B"), 100.0, 1.0);
  CHECK(si.Omega == doctest::Approx(2.75e5).epsilon(2e-3));
  for (const auto& p : {kCu, material_preset("Si-B")}) {
    const double Omega = drive_parameters(p, 1.0, 1.0).Omega;
    CHECK(drive_parameters(p, Omega, 1.0).K_mag == doctest::Approx(1.0).epsilon(1e-2));
  }
  const double approx = kCu.omega_p * kCu.omega_p * 100.0 / (kCu.gamma * cu.omega_h * cu.omega_h);
  CHECK(cu.K_mag == doctest::Approx(approx).epsilon(1e-8));
  CHECK_THROWS_AS(drive_parameters(kCu, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(drive_parameters(kCu, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("reduced TE coefficient matches Fresnel") {
  const double h = 1.0, w_d = 100.0;
  const auto drive = drive_parameters(kCu, w_d, h);
  const Complex eps = eps_real_axis(make_model(ResponseModel::Drude, kCu), w_d);
  for (double k = 0.01; k < 100.0; k *= 1.7) {
    const WaveKinematics kin{w_d, k};
    const double w = h * kin.q().real();
    CHECK(rel_diff(r_te_reduced(drive.K, w), r_fresnel(Polarization::TE, kin, eps)) < 1e-10);
  }
}

TEST_CASE("Cu and Si-B agree at equal |K| in the reduced variable") {
  const double h = 1.0;
  const auto si_params = material_preset("Si-B");
  const double ratio = drive_parameters(si_params, 1.0, h).Omega / drive_parameters(kCu, 1.0, h).Omega;
  double worst = 0.0;
  for (double w_cu : {1.0, 10.0, 100.0, 1000.0}) {
    const auto cu = drive_parameters(kCu, w_cu, h);
    const auto si = drive_parameters(si_params, w_cu * ratio, h);
    CHECK(cu.K_mag == doctest::Approx(si.K_mag).epsilon(1e-2));
    for (double w = 0.01; w < 100.0; w *= 1.3) {
      worst = std::max(worst, rel_diff(r_te_reduced(si.K, w), r_te_reduced(cu.K, w)));
    }
  }
  CHECK(worst < 1e-2);
}
