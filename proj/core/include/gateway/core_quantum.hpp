#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace gateway {

using ComplexAmplitude = std::complex<double>;

/// The two macroscopic worlds produced by the photon measurement.
enum class Branch : std::uint8_t { One = 1, Two = 2 };

std::string_view to_string(Branch branch) noexcept;
Branch other(Branch branch) noexcept;

enum class Stage : std::uint8_t { T0, T1, T2, ExcitationWindow, T3 };

std::string_view to_string(Stage stage) noexcept;

struct TimelineStage {
  Stage tag = Stage::T0;
  double time = 0.0;  // s

  friend bool operator==(const TimelineStage&, const TimelineStage&) = default;
};

/// Default stage times when a scenario does not override them.
inline constexpr double kDefaultT0 = 0.0;
inline constexpr double kDefaultT1 = 1.0e-6;
inline constexpr double kDefaultT2 = 2.0e-6;

/// Joint state of photon, filter, laboratory and ion, reduced to branch weights,
/// per-branch excitation amplitudes of the ion's relative states and the scalar
/// coherence of the inter-world off-diagonal element.
struct BranchedState {
  TimelineStage stage;
  ComplexAmplitude w1_amp;
  ComplexAmplitude w2_amp;
  ComplexAmplitude a1_excited_amp;
  ComplexAmplitude a2_excited_amp;
  double coherence_factor = 1.0;
  // Resonant photons drawn from the drive field in each branch.
  double photons_absorbed_1 = 0.0;
  double photons_absorbed_2 = 0.0;

  friend bool operator==(const BranchedState&, const BranchedState&) = default;
};

/// Branch-basis overlap matrix <A_i|A_j>.
struct InterWorldDensityMatrix {
  ComplexAmplitude rho11;
  ComplexAmplitude rho12;
  ComplexAmplitude rho21;
  ComplexAmplitude rho22;

  [[nodiscard]] ComplexAmplitude trace() const noexcept { return rho11 + rho22; }
  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const noexcept;
  [[nodiscard]] bool is_positive(double tol = 1e-12) const noexcept;
};

struct EnergyLedger {
  double branch1_field_energy_change = 0.0;  // J
  double branch2_field_energy_change = 0.0;  // J
  double branch1_ion_energy = 0.0;           // J
  double branch2_ion_energy = 0.0;           // J
  double universe_balance = 0.0;             // J
  double energy_scale = 0.0;                 // J, hbar * omega_hf

  /// |universe_balance| relative to the quantum of exchanged energy.
  [[nodiscard]] double relative_imbalance() const noexcept;
  [[nodiscard]] bool balanced(double rel_tol = 1e-12) const noexcept {
    return relative_imbalance() < rel_tol;
  }

  friend bool operator==(const EnergyLedger&, const EnergyLedger&) = default;
};

struct BranchProbabilities {
  double first = 0.0;
  double second = 0.0;
};

/// Throws ValidationError unless amplitudes are finite, normalized to 1e-12,
/// coherence lies in [0,1] and no excitation precedes the excitation window.
void validate(const BranchedState& state);

/// State at t0. `photon_split` is the probability of the transmitted branch.
BranchedState initial_state(double photon_split, double t0 = kDefaultT0);

/// Moves to the immediate successor stage. Amplitudes and coherence are untouched.
BranchedState advance_stage(const BranchedState& state, TimelineStage next);

InterWorldDensityMatrix relative_density_matrix(const BranchedState& state);

BranchProbabilities branch_probabilities(const BranchedState& state);

/// Records the drive in `pumping` branch. `p_pumped` and `p_other` are the
/// excitation probabilities seen in the pumping and the other branch. All energy
/// the ion gains in either branch is drawn from the pumping branch's field.
/// Only valid during the excitation window.
BranchedState apply_excitation(const BranchedState& state, Branch pumping, double p_pumped,
                               double p_other);

/// Multiplies the off-diagonal coherence by `factor` in [0,1].
BranchedState damp_coherence(const BranchedState& state, double factor);

/// Energy bookkeeping at t3. `hyperfine_omega` is the transition rate in s^-1.
EnergyLedger energy_ledger(const BranchedState& state, double hyperfine_omega);

}  // namespace gateway
