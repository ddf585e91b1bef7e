#pragma once

#include <numbers>

// CODATA 2018 values, SI units.
namespace latvdw::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c = 299792458.0;                  // m/s
inline constexpr double epsilon0 = 8.8541878128e-12;      // F/m
inline constexpr double mu0 = 1.0 / (epsilon0 * c * c);   // H/m
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double angstrom = 1e-10;                 // m

// Standard atomic weights of the two species used by the defaults.
inline constexpr double caesium_mass_u = 132.90545196;
inline constexpr double rubidium_mass_u = 85.4678;

}  // namespace latvdw::constants
