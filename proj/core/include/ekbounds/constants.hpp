#ifndef EKBOUNDS_CONSTANTS_HPP
#define EKBOUNDS_CONSTANTS_HPP

// Mathematical constants used by the coefficient tables.  All literals carry
// at least 20 significant digits so the stored double is correctly rounded;
// nothing is computed at runtime.

namespace ekbounds {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double kLog2Pi = 1.8378770664093454836;
inline constexpr double kLog4Pi = 2.5310242469692907930;
inline constexpr double kLog8Pi = 3.2241714275292361024;

}  // namespace ekbounds

#endif  // EKBOUNDS_CONSTANTS_HPP
