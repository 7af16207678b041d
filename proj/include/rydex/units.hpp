#ifndef RYDEX_UNITS_HPP
#define RYDEX_UNITS_HPP

#include <numbers>

namespace rydex {

// Internal unit system: time in us, length in um, angular frequency in rad/us.
// Config files quote frequencies as nu = omega/2pi in MHz; 1 MHz -> 2pi rad/us.
inline constexpr double speed_of_light = 2.998e8; // um/us
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

inline constexpr double mhz_to_rad_us(double nu_mhz) { return two_pi * nu_mhz; }
inline constexpr double rad_us_to_mhz(double omega) { return omega / two_pi; }

} // namespace rydex

#endif
