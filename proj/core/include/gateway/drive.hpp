#pragma once

#include <optional>
#include <string_view>

#include "gateway/core_quantum.hpp"

namespace gateway {

enum class PulseKind : std::uint8_t { Pi, MwiPi, Custom };

std::string_view to_string(PulseKind kind) noexcept;
std::optional<PulseKind> parse_pulse_kind(std::string_view text) noexcept;

/// Resonant microwave drive on the hyperfine transition.
struct PulseSpec {
  double duration = 0.0;                 // s
  double field_strength = 0.0;           // V/m
  double dipole_moment = 0.0;            // C m
  double carrier_frequency_omega = 0.0;  // s^-1
  PulseKind kind = PulseKind::Custom;
  std::optional<Branch> applied_in_branch;

  friend bool operator==(const PulseSpec&, const PulseSpec&) = default;
};

/// Checks signs and, for Pi / MwiPi kinds, that field * duration * dipole hits
/// pi * hbar (times sqrt 2 for MwiPi) to 1e-9 relative.
void validate(const PulseSpec& pulse);

enum class ExcitationModel : std::uint8_t { OneAndOnlyOne, Feedback };

std::string_view to_string(ExcitationModel model) noexcept;
std::optional<ExcitationModel> parse_excitation_model(std::string_view text) noexcept;

struct ExcitationResult {
  double probability_p = 0.0;
  double damping_D = 1.0;
  ExcitationModel model = ExcitationModel::OneAndOnlyOne;
};

/// E_pi = pi hbar / (t_p dipole).
double pi_pulse_field(double t_p, double dipole);

PulseSpec make_pi_pulse(double t_p, double dipole, double omega,
                        std::optional<Branch> branch = Branch::One);

/// A pi-pulse field held sqrt(2) longer, compensating for the drive existing in
/// one world only.
PulseSpec make_mwi_pulse(double t_p, double dipole, double omega,
                         std::optional<Branch> branch = Branch::One);

PulseSpec make_custom_pulse(double duration, double field, double dipole, double omega,
                            std::optional<Branch> branch = Branch::One);

/// nu = dipole * E / (2 sqrt(2) hbar).
double rabi_frequency(const PulseSpec& pulse);

/// sin^2(nu * t).
double rabi_probability(const PulseSpec& pulse);

/// Rate of the excitation-induced damping exponent. Normalized so that one
/// full MWI pi pulse (one absorbed photon) accumulates exponent 1; equals
/// 2 nu / pi.
double excitation_decoherence_rate(const PulseSpec& pulse);

/// exp(-excitation_decoherence_rate * duration).
double excitation_damping(const PulseSpec& pulse);

/// Independent-collision result: p = rabi_probability, D = excitation_damping.
ExcitationResult one_interaction_excitation(const PulseSpec& pulse);

/// Cross-world excitation when each absorption acts on an ion already partly
/// decohered. The effective Rabi angle is the integral of nu * D(t) over the
/// pulse, D(t) = exp(-rate * t), and p = sin^2 of that angle. The single-argument
/// form uses the excitation-induced rate; the two-argument form takes the total
/// coherence decay rate (0 recovers rabi_probability, +inf gives p = 0).
ExcitationResult feedback_excitation(const PulseSpec& pulse);
ExcitationResult feedback_excitation(const PulseSpec& pulse, double coherence_decay_rate);

/// The integral of nu * exp(-rate * t) over [0, duration], by adaptive
/// Gauss-Kronrod quadrature.
double feedback_rabi_angle(const PulseSpec& pulse, double coherence_decay_rate);

}  // namespace gateway
