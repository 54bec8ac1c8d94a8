#include "gateway/core_quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "gateway/constants.hpp"
#include "gateway/error.hpp"

namespace gateway {
namespace {

constexpr double kNormTol = 1e-12;

bool finite(ComplexAmplitude z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Stage successor(Stage stage) {
  switch (stage) {
    case Stage::T0: return Stage::T1;
    case Stage::T1: return Stage::T2;
    case Stage::T2: return Stage::ExcitationWindow;
    case Stage::ExcitationWindow: return Stage::T3;
    case Stage::T3: break;
  }
  throw ValidationError("advance_stage: T3 is the final stage");
}

void check_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(fmt::format("{} must lie in [0,1], got {}", what, p));
  }
}

}  // namespace

std::string_view to_string(Branch branch) noexcept {
  return branch == Branch::One ? "branch1" : "branch2";
}

Branch other(Branch branch) noexcept { return branch == Branch::One ? Branch::Two : Branch::One; }

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::T0: return "T0";
    case Stage::T1: return "T1";
    case Stage::T2: return "T2";
    case Stage::ExcitationWindow: return "ExcitationWindow";
    case Stage::T3: return "T3";
  }
  return "?";
}

bool InterWorldDensityMatrix::is_hermitian(double tol) const noexcept {
  return std::abs(rho21 - std::conj(rho12)) <= tol && std::abs(rho11.imag()) <= tol &&
         std::abs(rho22.imag()) <= tol;
}

bool InterWorldDensityMatrix::is_positive(double tol) const noexcept {
  if (rho11.real() < -tol || rho22.real() < -tol) return false;
  return std::norm(rho12) <= rho11.real() * rho22.real() + tol;
}

double EnergyLedger::relative_imbalance() const noexcept {
  if (energy_scale <= 0.0) return std::abs(universe_balance);
  return std::abs(universe_balance) / energy_scale;
}

void validate(const BranchedState& state) {
  if (!finite(state.w1_amp) || !finite(state.w2_amp) || !finite(state.a1_excited_amp) ||
      !finite(state.a2_excited_amp)) {
    throw ValidationError("BranchedState: non-finite amplitude");
  }
  const double norm = std::norm(state.w1_amp) + std::norm(state.w2_amp);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw ValidationError(fmt::format("BranchedState: branch weights sum to {}, not 1", norm));
  }
  if (!(state.coherence_factor >= 0.0 && state.coherence_factor <= 1.0)) {
    throw ValidationError(
        fmt::format("BranchedState: coherence factor {} outside [0,1]", state.coherence_factor));
  }
  if (state.stage.tag <= Stage::T2 &&
      (state.a1_excited_amp != 0.0 || state.a2_excited_amp != 0.0)) {
    throw ValidationError("BranchedState: ion excited before the excitation window");
  }
}

BranchedState initial_state(double photon_split, double t0) {
  check_probability(photon_split, "photon_split");
  if (!(t0 >= 0.0) || !std::isfinite(t0)) {
    throw ValidationError(fmt::format("initial_state: t0 must be >= 0, got {}", t0));
  }
  BranchedState state;
  state.stage = {Stage::T0, t0};
  state.w1_amp = std::sqrt(photon_split);
  state.w2_amp = std::sqrt(1.0 - photon_split);
  return state;
}

BranchedState advance_stage(const BranchedState& state, TimelineStage next) {
  const Stage expected = successor(state.stage.tag);
  if (next.tag != expected) {
    throw ValidationError(fmt::format("advance_stage: {} cannot follow {}; expected {}",
                                      to_string(next.tag), to_string(state.stage.tag),
                                      to_string(expected)));
  }
  // An empty excitation window (no drive) may coincide with t2.
  const bool ordered = next.tag == Stage::ExcitationWindow ? next.time >= state.stage.time
                                                            : next.time > state.stage.time;
  if (!ordered || !std::isfinite(next.time)) {
    throw ValidationError(fmt::format("advance_stage: time {} s for {} does not follow {} s",
                                      next.time, to_string(next.tag), state.stage.time));
  }
  BranchedState out = state;
  out.stage = next;
  return out;
}

InterWorldDensityMatrix relative_density_matrix(const BranchedState& state) {
  if (state.stage.tag < Stage::T2) {
    throw ValidationError(fmt::format("relative_density_matrix: relative states are defined from "
                                      "T2 on, state is at {}",
                                      to_string(state.stage.tag)));
  }
  InterWorldDensityMatrix rho;
  rho.rho11 = std::norm(state.w1_amp);
  rho.rho22 = std::norm(state.w2_amp);
  rho.rho12 = state.w1_amp * std::conj(state.w2_amp) * state.coherence_factor;
  rho.rho21 = std::conj(rho.rho12);
  return rho;
}

BranchProbabilities branch_probabilities(const BranchedState& state) {
  return {std::norm(state.w1_amp), std::norm(state.w2_amp)};
}

BranchedState apply_excitation(const BranchedState& state, Branch pumping, double p_pumped,
                               double p_other) {
  if (state.stage.tag != Stage::ExcitationWindow) {
    throw ValidationError(fmt::format("apply_excitation: drive acts only during the excitation "
                                      "window, state is at {}",
                                      to_string(state.stage.tag)));
  }
  check_probability(p_pumped, "p_pumped");
  check_probability(p_other, "p_other");

  const auto [w1, w2] = branch_probabilities(state);
  const double w_pump = pumping == Branch::One ? w1 : w2;
  const double w_other = pumping == Branch::One ? w2 : w1;
  if (w_pump == 0.0) {
    throw ValidationError("apply_excitation: pumping branch carries zero weight");
  }

  // Rabi flopping from the ground state picks up a -i phase.
  const ComplexAmplitude minus_i{0.0, -1.0};
  BranchedState out = state;
  ComplexAmplitude& a_pump = pumping == Branch::One ? out.a1_excited_amp : out.a2_excited_amp;
  ComplexAmplitude& a_other = pumping == Branch::One ? out.a2_excited_amp : out.a1_excited_amp;
  a_pump = minus_i * std::sqrt(p_pumped);
  a_other = minus_i * std::sqrt(p_other);

  const double absorbed = (w_pump * p_pumped + w_other * p_other) / w_pump;
  (pumping == Branch::One ? out.photons_absorbed_1 : out.photons_absorbed_2) += absorbed;
  return out;
}

BranchedState damp_coherence(const BranchedState& state, double factor) {
  check_probability(factor, "coherence damping factor");
  BranchedState out = state;
  out.coherence_factor *= factor;
  return out;
}

EnergyLedger energy_ledger(const BranchedState& state, double hyperfine_omega) {
  if (state.stage.tag != Stage::T3) {
    throw ValidationError(fmt::format("energy_ledger: requires stage T3, state is at {}",
                                      to_string(state.stage.tag)));
  }
  if (!(hyperfine_omega > 0.0)) {
    throw ValidationError("energy_ledger: hyperfine frequency must be positive");
  }
  const double quantum = kCodata2018.hbar * hyperfine_omega;
  const auto [w1, w2] = branch_probabilities(state);

  EnergyLedger ledger;
  ledger.energy_scale = quantum;
  ledger.branch1_ion_energy = quantum * std::norm(state.a1_excited_amp);
  ledger.branch2_ion_energy = quantum * std::norm(state.a2_excited_amp);
  ledger.branch1_field_energy_change = -state.photons_absorbed_1 * quantum;
  ledger.branch2_field_energy_change = -state.photons_absorbed_2 * quantum;

  // The ion starts in its ground state and the field changes are measured from
  // the pre-branching field, so the initial total is zero.
  constexpr double initial_total = 0.0;
  ledger.universe_balance = w1 * ledger.branch1_field_energy_change +
                            w2 * ledger.branch2_field_energy_change +
                            w1 * ledger.branch1_ion_energy + w2 * ledger.branch2_ion_energy -
                            initial_total;
  return ledger;
}

}  // namespace gateway
