#pragma once

// CODATA 2018 values, SI units.

namespace dce::constants {

inline constexpr double kSpeedOfLight = 299792458.0;           // m/s
inline constexpr double kPlanck = 6.62607015e-34;              // J s
inline constexpr double kBoltzmann = 1.380649e-23;             // J/K
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // H/m
inline constexpr double kElectronVolt = 1.602176634e-19;       // J
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace dce::constants
