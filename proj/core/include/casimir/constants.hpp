#pragma once

#include <numbers>

/// Physical constants, SI units (2018 CODATA exact values where defined).
namespace casimir::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double speed_of_light = 299792458.0;           // m/s
inline constexpr double hbar = 1.054571817e-34;                 // J s
inline constexpr double boltzmann = 1.380649e-23;               // J/K
inline constexpr double elementary_charge = 1.602176634e-19;    // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
inline constexpr double electron_mass = 9.1093837015e-31;       // kg

} // namespace casimir::constants
