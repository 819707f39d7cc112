#pragma once

namespace tripod {

// CODATA 2018 values, SI units.
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double hbar = 1.054571817e-34;                // J.s
inline constexpr double epsilon0 = 8.8541878128e-12;           // F/m

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Limit of erf(z)/z at z = 0.
inline constexpr double two_over_sqrt_pi = 1.1283791670955125738961589031215452;

// A denominator whose gamma-scaled magnitude falls below this is treated as a
// resonance pole rather than evaluated.
inline constexpr double pole_guard = 1e-12;

} // namespace tripod
