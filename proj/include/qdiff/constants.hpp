#pragma once

// Fundamental constants, CODATA 2018. Fixed so that the numeric claims of the
// tool (de Broglie lengths, crossover temperatures) are reproducible without
// user input.
namespace qdiff::constants {

inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double k_boltzmann = 1.380649e-23;        // J / K
inline constexpr double proton_mass = 1.67262192369e-27;   // kg
inline constexpr double electron_mass = 9.1093837015e-31;  // kg

// exact conversion factors
inline constexpr double electron_volt = 1.602176634e-19;   // J
inline constexpr double angstrom = 1e-10;                  // m

inline constexpr double room_temperature = 298.15;         // K

}  // namespace qdiff::constants
