#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gateway/damping.hpp"
#include "gateway/drive.hpp"

namespace gateway {

/// One elastic collision in the dilute-gas picture: scattering amplitude f,
/// evaluation radius r and the random relative phase between the two worlds.
struct ScatteringEvent {
  double amplitude_f = 0.0;  // m
  double radius_r = 0.0;     // m
  double phase_kick = 0.0;   // rad
};

void validate(const ScatteringEvent& event);

/// A named decoherence source with rate sigma * flux.
struct ScatteringChannel {
  std::string name;
  double cross_section = 0.0;  // m^2
  double flux = 0.0;           // m^-2 s^-1

  [[nodiscard]] double rate() const noexcept { return cross_section * flux; }
  friend bool operator==(const ScatteringChannel&, const ScatteringChannel&) = default;
};

void validate(const ScatteringChannel& channel);

struct TrapConfig {
  double temperature = 0.0;                   // K
  double pressure = 0.0;                      // Pa
  double gas_molecule_mass = 0.0;             // kg
  double elastic_cross_section_sigma_c = 0.0; // m^2, rest gas on the ion
  double photon_cross_section = 0.0;          // m^2, angle-averaged Thomson
  double confining_field_E_c = 0.0;           // V/m
  double field_variability_fraction_f_v = 0.0;
  double field_variability_frequency = 0.0;   // s^-1
  double trap_extension_d = 0.0;              // m
  double ion_mass = 0.0;                      // kg

  friend bool operator==(const TrapConfig&, const TrapConfig&) = default;
};

/// Temperature, masses, trap size and variability frequency must be positive.
/// Pressure, cross sections and the confining field may be zero, which switches
/// the corresponding channel off. f_v lies in [0,1].
void validate(const TrapConfig& config);

/// Single 199Hg+ ion, H2 rest gas at 300 K and 1e-9 torr, 1000 V/m static
/// confinement with f_v = 1e-10 varying on a 1 s scale.
TrapConfig reference_trap_config();

inline constexpr double kHydrogenMoleculeMass = 3.347e-27;   // kg
inline constexpr double kHgH2CrossSection = 2.4e-18;          // m^2
inline constexpr double kAveragedThomsonCrossSection = 5.2e-40;  // m^2
inline constexpr double kHg199IonMass = 3.30e-25;             // kg

/// Upper bound on sigma / (4 pi r^2) for the first-order collision expansion.
inline constexpr double kMaxDiluteRatio = 0.1;

/// sigma / (4 pi r^2) = f^2 / r^2. Throws when r <= 0 or the ratio reaches
/// kMaxDiluteRatio.
double dilute_ratio(double sigma, double radius);

/// D = 1 - sigma / (4 pi r^2) for one isotropic elastic collision.
DampingFactor single_collision_damping(double sigma, double radius);

/// D^n after n independent collisions.
DampingFactor repeated_damping(DampingFactor d_single, std::uint64_t n);

/// exp(-sigma * phi * t).
double damping_at_time(const ScatteringChannel& channel, double t);

/// 1 / (sigma * phi), or DecoherenceTime::none() for a zero rate.
DecoherenceTime decoherence_time(const ScatteringChannel& channel);

/// Ideal-gas number density times mean thermal speed of the rest-gas molecule.
double rest_gas_flux(const TrapConfig& config);
ScatteringChannel rest_gas_channel(const TrapConfig& config);
DecoherenceTime rest_gas_decoherence_time(const TrapConfig& config);

/// Photon flux eps0 c E^2 / (hbar omega) of a drive field. omega is the plain
/// numeric frequency in s^-1.
double microwave_flux(double field_E, double omega);

/// Decoherence time from elastic scattering of a pi-pulse drive of length t_p:
/// t_p^2 dipole^2 omega / (eps0 c pi^2 hbar sigma).
double microwave_elastic_decoherence_time(double dipole, double t_p, double sigma, double omega);

/// Decoherence time from the residual time-dependent part f_v * E_c of the
/// confining field varying at omega_var: hbar omega_var / (eps0 c (f_v E_c)^2 sigma).
double trap_field_decoherence_time(double sigma, double omega_var, double E_c, double f_v);

/// Channel equivalents used by the budget; rates may be zero.
ScatteringChannel microwave_elastic_channel(const TrapConfig& config, const PulseSpec& pulse);
ScatteringChannel trap_field_channel(const TrapConfig& config);

struct BudgetEntry {
  std::string channel;
  DecoherenceTime time;
  /// False for sources present only while a drive pulse is on.
  bool active_without_pulse = true;

  friend bool operator==(const BudgetEntry&, const BudgetEntry&) = default;
};

struct DecoherenceBudget {
  std::vector<BudgetEntry> entries;
  DecoherenceTime combined = DecoherenceTime::none();

  /// Harmonic combination of the entries that persist without a drive pulse.
  [[nodiscard]] DecoherenceTime without_pulse() const;

  friend bool operator==(const DecoherenceBudget&, const DecoherenceBudget&) = default;
};

/// combined = 1 / sum(1 / entry), the sentinel when every rate is zero.
DecoherenceBudget make_budget(std::vector<BudgetEntry> entries);

inline constexpr const char* kRestGasChannel = "rest_gas";
inline constexpr const char* kMicrowaveElasticChannel = "microwave_elastic";
inline constexpr const char* kTrapFieldChannel = "trap_field";

/// Rest gas, microwave elastic scattering (only with a pulse) and trap fields.
DecoherenceBudget decoherence_budget(const TrapConfig& config,
                                     const std::optional<PulseSpec>& pulse);

/// Time for the excited region of the ion's phase space to overlap the
/// unexcited one: d_coh * d * m / h.
double mixing_timescale(double d_coh, double trap_extension_d, double ion_mass);

}  // namespace gateway
