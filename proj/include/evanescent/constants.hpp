#pragma once

#include <numbers>

// Physical constants, Gaussian (CGS) units.
namespace evanescent::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double speed_of_light = 2.99792458e10;  // cm/s
inline constexpr double hbar = 1.054571817e-27;          // erg s
inline constexpr double boltzmann = 1.380649e-16;        // erg/K

inline constexpr double zeta3 = 1.2020569031595942853997;

// 1 erg/cm^3 = 0.1 Pa
inline constexpr double pascal_per_erg_cm3 = 0.1;
// 1 Oe corresponds to 1e-4 T (vacuum) and 1e3/(4 pi) A/m
inline constexpr double tesla_per_oersted = 1e-4;
inline constexpr double amp_per_meter_per_oersted = 1e3 / (4.0 * pi);

}  // namespace evanescent::constants
