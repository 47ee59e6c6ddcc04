#ifndef SPP_CONSTANTS_HPP
#define SPP_CONSTANTS_HPP

#include <numbers>

namespace spp::constants {

// CODATA 2018 (exact where the SI fixes them).
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double q = 1.602176634e-19;          // C
inline constexpr double k_B = 1.380649e-23;           // J/K
inline constexpr double eps0 = 8.8541878128e-12;      // F/m
inline constexpr double mu0 = 1.25663706212e-6;       // N/A^2
inline constexpr double c = 299792458.0;              // m/s
// Free-space impedance as used in the dispersion relation (rounded value).
inline constexpr double Z0 = 377.0;                   // Ohm

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace spp::constants

#endif  // SPP_CONSTANTS_HPP
