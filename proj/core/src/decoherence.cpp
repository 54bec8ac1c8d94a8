#include "gateway/decoherence.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "gateway/constants.hpp"
#include "gateway/error.hpp"

namespace gateway {
namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, std::string_view message) {
  if (!ok) throw ValidationError(std::string(message));
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }
bool nonnegative(double x) { return x >= 0.0 && std::isfinite(x); }

}  // namespace

void validate(const ScatteringEvent& event) {
  require(positive(event.radius_r), "ScatteringEvent: radius must be > 0");
  require(nonnegative(event.amplitude_f), "ScatteringEvent: amplitude must be >= 0");
  require(std::isfinite(event.phase_kick), "ScatteringEvent: phase kick must be finite");
  const double ratio = (event.amplitude_f / event.radius_r) * (event.amplitude_f / event.radius_r);
  require(ratio < 1.0, "ScatteringEvent: f^2/r^2 must be < 1 in the dilute-gas regime");
}

void validate(const ScatteringChannel& channel) {
  if (!nonnegative(channel.cross_section) || !nonnegative(channel.flux)) {
    throw ValidationError(fmt::format("channel '{}': cross section and flux must be >= 0",
                                      channel.name));
  }
}

void validate(const TrapConfig& c) {
  require(positive(c.temperature), "trap: temperature must be > 0");
  require(nonnegative(c.pressure), "trap: pressure must be >= 0");
  require(positive(c.gas_molecule_mass), "trap: gas molecule mass must be > 0");
  require(nonnegative(c.elastic_cross_section_sigma_c), "trap: elastic cross section must be >= 0");
  require(nonnegative(c.photon_cross_section), "trap: photon cross section must be >= 0");
  require(nonnegative(c.confining_field_E_c), "trap: confining field must be >= 0");
  require(c.field_variability_fraction_f_v >= 0.0 && c.field_variability_fraction_f_v <= 1.0,
          "trap: field variability fraction must lie in [0,1]");
  require(positive(c.field_variability_frequency), "trap: field variability frequency must be > 0");
  require(positive(c.trap_extension_d), "trap: trap extension must be > 0");
  require(positive(c.ion_mass), "trap: ion mass must be > 0");
}

TrapConfig reference_trap_config() {
  return TrapConfig{
      .temperature = 300.0,
      .pressure = 1.0e-9 * units::kTorr,
      .gas_molecule_mass = kHydrogenMoleculeMass,
      .elastic_cross_section_sigma_c = kHgH2CrossSection,
      .photon_cross_section = kAveragedThomsonCrossSection,
      .confining_field_E_c = 1000.0,
      .field_variability_fraction_f_v = 1.0e-10,
      .field_variability_frequency = 1.0,
      .trap_extension_d = 1.0e-6,
      .ion_mass = kHg199IonMass,
  };
}

double dilute_ratio(double sigma, double radius) {
  if (!positive(radius)) {
    throw ValidationError(fmt::format("collision radius must be > 0, got {}", radius));
  }
  if (!nonnegative(sigma)) {
    throw ValidationError(fmt::format("cross section must be >= 0, got {}", sigma));
  }
  const double ratio = sigma / (4.0 * kPi * radius * radius);
  if (ratio >= kMaxDiluteRatio) {
    throw ValidationError(fmt::format(
        "dilute-gas approximation violated: sigma/(4 pi r^2) = {} at r = {} m (limit {})", ratio,
        radius, kMaxDiluteRatio));
  }
  return ratio;
}

DampingFactor single_collision_damping(double sigma, double radius) {
  return DampingFactor::from_deficit(dilute_ratio(sigma, radius));
}

DampingFactor repeated_damping(DampingFactor d_single, std::uint64_t n) {
  return d_single.pow(n);
}

double damping_at_time(const ScatteringChannel& channel, double t) {
  validate(channel);
  if (!(t >= 0.0)) throw ValidationError(fmt::format("time must be >= 0, got {}", t));
  if (t == 0.0) return 1.0;
  return std::exp(-channel.rate() * t);
}

DecoherenceTime decoherence_time(const ScatteringChannel& channel) {
  validate(channel);
  return DecoherenceTime::from_rate(channel.rate());
}

double rest_gas_flux(const TrapConfig& config) {
  validate(config);
  const double kT = kCodata2018.k_boltzmann * config.temperature;
  const double number_density = config.pressure / kT;
  const double mean_speed = std::sqrt(8.0 * kT / (kPi * config.gas_molecule_mass));
  return number_density * mean_speed;
}

ScatteringChannel rest_gas_channel(const TrapConfig& config) {
  const double flux = rest_gas_flux(config);
  return {kRestGasChannel, config.elastic_cross_section_sigma_c, flux};
}

DecoherenceTime rest_gas_decoherence_time(const TrapConfig& config) {
  return decoherence_time(rest_gas_channel(config));
}

double microwave_flux(double field_E, double omega) {
  if (!positive(omega)) {
    throw ValidationError(fmt::format("microwave frequency must be > 0, got {}", omega));
  }
  if (!nonnegative(field_E)) {
    throw ValidationError(fmt::format("field strength must be >= 0, got {}", field_E));
  }
  const auto& k = kCodata2018;
  return k.epsilon0 * k.c_light * field_E * field_E / (k.hbar * omega);
}

double microwave_elastic_decoherence_time(double dipole, double t_p, double sigma, double omega) {
  require(positive(dipole) && positive(t_p) && positive(sigma) && positive(omega),
          "microwave_elastic_decoherence_time: all inputs must be > 0");
  const auto& k = kCodata2018;
  return t_p * t_p * dipole * dipole * omega /
         (k.epsilon0 * k.c_light * kPi * kPi * k.hbar * sigma);
}

double trap_field_decoherence_time(double sigma, double omega_var, double E_c, double f_v) {
  require(positive(sigma) && positive(omega_var) && positive(E_c) && positive(f_v),
          "trap_field_decoherence_time: all inputs must be > 0");
  const auto& k = kCodata2018;
  const double varying = f_v * E_c;
  return k.hbar * omega_var / (k.epsilon0 * k.c_light * varying * varying * sigma);
}

ScatteringChannel microwave_elastic_channel(const TrapConfig& config, const PulseSpec& pulse) {
  const double flux = microwave_flux(pulse.field_strength, pulse.carrier_frequency_omega);
  return {kMicrowaveElasticChannel, config.photon_cross_section, flux};
}

ScatteringChannel trap_field_channel(const TrapConfig& config) {
  // The varying field component acts like a photon flux at omega_var.
  const double varying = config.field_variability_fraction_f_v * config.confining_field_E_c;
  const double flux = microwave_flux(varying, config.field_variability_frequency);
  return {kTrapFieldChannel, config.photon_cross_section, flux};
}

DecoherenceTime DecoherenceBudget::without_pulse() const {
  double rate = 0.0;
  for (const auto& entry : entries) {
    if (entry.active_without_pulse) rate += entry.time.rate();
  }
  return DecoherenceTime::from_rate(rate);
}

DecoherenceBudget make_budget(std::vector<BudgetEntry> entries) {
  double rate = 0.0;
  for (const auto& entry : entries) rate += entry.time.rate();
  return {std::move(entries), DecoherenceTime::from_rate(rate)};
}

DecoherenceBudget decoherence_budget(const TrapConfig& config,
                                     const std::optional<PulseSpec>& pulse) {
  validate(config);
  std::vector<BudgetEntry> entries;
  entries.push_back({kRestGasChannel, rest_gas_decoherence_time(config), true});
  if (pulse) {
    validate(*pulse);
    entries.push_back(
        {kMicrowaveElasticChannel, decoherence_time(microwave_elastic_channel(config, *pulse)),
         false});
  } else {
    entries.push_back({kMicrowaveElasticChannel, DecoherenceTime::none(), false});
  }
  entries.push_back({kTrapFieldChannel, decoherence_time(trap_field_channel(config)), true});
  return make_budget(std::move(entries));
}

double mixing_timescale(double d_coh, double trap_extension_d, double ion_mass) {
  require(nonnegative(d_coh), "mixing_timescale: coherence length must be >= 0");
  require(positive(trap_extension_d) && positive(ion_mass),
          "mixing_timescale: trap extension and ion mass must be > 0");
  return d_coh * trap_extension_d * ion_mass / kCodata2018.h;
}

}  // namespace gateway
