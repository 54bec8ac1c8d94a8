#include "gateway/drive.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "gateway/constants.hpp"
#include "gateway/error.hpp"

namespace gateway {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPulseAreaTol = 1e-9;

// Past this many e-folds the integrand is below 1e-22 of its initial value.
constexpr double kIntegrandCutoffEfolds = 50.0;

void require_positive(double value, std::string_view what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(fmt::format("{} must be positive and finite, got {}", what, value));
  }
}

}  // namespace

std::string_view to_string(PulseKind kind) noexcept {
  switch (kind) {
    case PulseKind::Pi: return "pi";
    case PulseKind::MwiPi: return "mwi_pi";
    case PulseKind::Custom: return "custom";
  }
  return "?";
}

std::optional<PulseKind> parse_pulse_kind(std::string_view text) noexcept {
  if (text == "pi") return PulseKind::Pi;
  if (text == "mwi_pi") return PulseKind::MwiPi;
  if (text == "custom") return PulseKind::Custom;
  return std::nullopt;
}

std::string_view to_string(ExcitationModel model) noexcept {
  return model == ExcitationModel::Feedback ? "feedback" : "one-interaction";
}

std::optional<ExcitationModel> parse_excitation_model(std::string_view text) noexcept {
  if (text == "feedback") return ExcitationModel::Feedback;
  if (text == "one-interaction") return ExcitationModel::OneAndOnlyOne;
  return std::nullopt;
}

void validate(const PulseSpec& pulse) {
  if (!(pulse.duration >= 0.0) || !std::isfinite(pulse.duration)) {
    throw ValidationError(fmt::format("pulse duration must be >= 0, got {}", pulse.duration));
  }
  if (!(pulse.field_strength >= 0.0) || !std::isfinite(pulse.field_strength)) {
    throw ValidationError(
        fmt::format("pulse field strength must be >= 0, got {}", pulse.field_strength));
  }
  require_positive(pulse.dipole_moment, "pulse dipole moment");
  require_positive(pulse.carrier_frequency_omega, "pulse carrier frequency");

  if (pulse.kind == PulseKind::Custom) return;
  const double stretch = pulse.kind == PulseKind::MwiPi ? kSqrt2 : 1.0;
  const double area = pulse.field_strength * (pulse.duration / stretch) * pulse.dipole_moment;
  const double target = kPi * kCodata2018.hbar;
  if (std::abs(area - target) > kPulseAreaTol * target) {
    throw ValidationError(fmt::format("{} pulse: field * duration * dipole = {} J s, expected {} J s",
                                      to_string(pulse.kind), area * stretch, target * stretch));
  }
}

double pi_pulse_field(double t_p, double dipole) {
  require_positive(t_p, "pi pulse length t_p");
  require_positive(dipole, "dipole moment");
  return kPi * kCodata2018.hbar / (t_p * dipole);
}

PulseSpec make_pi_pulse(double t_p, double dipole, double omega, std::optional<Branch> branch) {
  require_positive(omega, "carrier frequency");
  return PulseSpec{.duration = t_p,
                   .field_strength = pi_pulse_field(t_p, dipole),
                   .dipole_moment = dipole,
                   .carrier_frequency_omega = omega,
                   .kind = PulseKind::Pi,
                   .applied_in_branch = branch};
}

PulseSpec make_mwi_pulse(double t_p, double dipole, double omega, std::optional<Branch> branch) {
  PulseSpec pulse = make_pi_pulse(t_p, dipole, omega, branch);
  pulse.duration = kSqrt2 * t_p;
  pulse.kind = PulseKind::MwiPi;
  return pulse;
}

PulseSpec make_custom_pulse(double duration, double field, double dipole, double omega,
                            std::optional<Branch> branch) {
  PulseSpec pulse{.duration = duration,
                  .field_strength = field,
                  .dipole_moment = dipole,
                  .carrier_frequency_omega = omega,
                  .kind = PulseKind::Custom,
                  .applied_in_branch = branch};
  validate(pulse);
  return pulse;
}

double rabi_frequency(const PulseSpec& pulse) {
  return pulse.dipole_moment * pulse.field_strength / (2.0 * kSqrt2 * kCodata2018.hbar);
}

double rabi_probability(const PulseSpec& pulse) {
  const double s = std::sin(rabi_frequency(pulse) * pulse.duration);
  return s * s;
}

double excitation_decoherence_rate(const PulseSpec& pulse) {
  return 2.0 * rabi_frequency(pulse) / kPi;
}

double excitation_damping(const PulseSpec& pulse) {
  return std::exp(-excitation_decoherence_rate(pulse) * pulse.duration);
}

ExcitationResult one_interaction_excitation(const PulseSpec& pulse) {
  return {rabi_probability(pulse), excitation_damping(pulse), ExcitationModel::OneAndOnlyOne};
}

double feedback_rabi_angle(const PulseSpec& pulse, double coherence_decay_rate) {
  if (std::isnan(coherence_decay_rate) || coherence_decay_rate < 0.0) {
    throw ValidationError(
        fmt::format("coherence decay rate must be >= 0, got {}", coherence_decay_rate));
  }
  const double nu = rabi_frequency(pulse);
  if (pulse.duration == 0.0 || nu == 0.0 || std::isinf(coherence_decay_rate)) return 0.0;

  double upper = pulse.duration;
  if (coherence_decay_rate > 0.0) {
    upper = std::min(upper, kIntegrandCutoffEfolds / coherence_decay_rate);
  }
  // Integrate on the dimensionless interval [0,1] so tolerances are scale-free.
  const double exponent_span = coherence_decay_rate * upper;
  auto integrand = [exponent_span](double s) { return std::exp(-exponent_span * s); };
  double error = 0.0;
  const double unit_integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, 1.0, 15, 1e-13, &error);
  return nu * upper * unit_integral;
}

ExcitationResult feedback_excitation(const PulseSpec& pulse) {
  return feedback_excitation(pulse, excitation_decoherence_rate(pulse));
}

ExcitationResult feedback_excitation(const PulseSpec& pulse, double coherence_decay_rate) {
  const double s = std::sin(feedback_rabi_angle(pulse, coherence_decay_rate));
  const double damping =
      std::isinf(coherence_decay_rate) ? (pulse.duration > 0.0 ? 0.0 : 1.0)
                                       : std::exp(-coherence_decay_rate * pulse.duration);
  return {s * s, damping, ExcitationModel::Feedback};
}

}  // namespace gateway
