#pragma once

namespace gateway {

/// CODATA 2018 values in SI units.
struct PhysicalConstants {
  double hbar;           // J s
  double h;              // J s
  double k_boltzmann;    // J / K
  double epsilon0;       // F / m
  double c_light;        // m / s
  double bohr_magneton;  // J / T
};

inline constexpr PhysicalConstants kCodata2018{
    .hbar = 1.054571817e-34,
    .h = 6.62607015e-34,
    .k_boltzmann = 1.380649e-23,
    .epsilon0 = 8.8541878128e-12,
    .c_light = 299792458.0,
    .bohr_magneton = 9.2740100783e-24,
};

namespace units {
inline constexpr double kTorr = 101325.0 / 760.0;         // Pa
inline constexpr double kNanobar = 1.0e-4;                // Pa
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
}  // namespace units

/// Magnetic dipole transition element approximated by mu_B / c, in C m.
inline constexpr double kBohrMagnetonDipole =
    kCodata2018.bohr_magneton / kCodata2018.c_light;

/// 199Hg+ ground-state hyperfine transition, used as a plain numeric rate.
inline constexpr double kHg199HyperfineOmega = 4.05e10;  // s^-1

/// Validates the constant set: strictly positive entries.
bool constants_are_valid(const PhysicalConstants& constants) noexcept;

}  // namespace gateway
