#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gateway/constants.hpp"
#include "gateway/core_quantum.hpp"
#include "gateway/decoherence.hpp"
#include "gateway/drive.hpp"
#include "gateway/random.hpp"
#include "gateway/statistics.hpp"

namespace gateway {

/// Which pulse the laboratory applies in each world. At most one world drives.
struct PulsePolicy {
  std::optional<PulseSpec> on_branch1;
  std::optional<PulseSpec> on_branch2;

  friend bool operator==(const PulsePolicy&, const PulsePolicy&) = default;
};

struct StageTimes {
  double t0 = kDefaultT0;
  double t1 = kDefaultT1;
  double t2 = kDefaultT2;

  friend bool operator==(const StageTimes&, const StageTimes&) = default;
};

struct ProtocolScenario {
  TrapConfig trap;
  PulsePolicy pulse_policy;
  StageTimes stage_times;
  /// From t2 to the readout in the receiving world; the drive starts at t2 and
  /// must end strictly before readout.
  double wait_before_readout = 2.0;  // s
  std::uint64_t n_trials = 1000;
  std::uint64_t seed = 0;
  ExcitationModel model = ExcitationModel::Feedback;
  double photon_split = 0.5;
  double hyperfine_frequency = kHg199HyperfineOmega;  // s^-1

  friend bool operator==(const ProtocolScenario&, const ProtocolScenario&) = default;
};

void validate(const ProtocolScenario& scenario);

/// Reference trap with an MWI pi pulse (t_p = 1 s) applied in branch 1.
ProtocolScenario reference_scenario();

enum class Readout : std::uint8_t { F0, F1 };

std::string_view to_string(Readout readout) noexcept;

struct MeasurementRecord {
  std::uint64_t trial = 0;
  Branch branch = Branch::Two;
  Readout readout_state = Readout::F0;
  double coherence_at_readout = 0.0;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

struct MeasurementOutcome {
  Readout readout = Readout::F0;
  /// Fluorescence detection decoheres the ion completely.
  double coherence_after = 0.0;
};

/// Bernoulli readout: F1 with probability p.
MeasurementOutcome measure_ion(double probability_p, Rng& rng);

/// Deterministic part of one trial, identical for every trial of a scenario.
struct TrialPlan {
  BranchedState final_state;
  std::optional<Branch> pumping;
  Branch receiver = Branch::Two;
  double p_pumped = 0.0;
  double p_transfer = 0.0;  // before environmental decoherence of the readout
  double p_receiver = 0.0;  // excitation probability seen at readout
  double environment_coherence = 1.0;
  DecoherenceBudget budget;
  EnergyLedger energy;
  /// Drive duration over the combined decoherence time during the drive.
  double excitation_to_decoherence_ratio = 0.0;
  std::vector<std::string> warnings;
};

TrialPlan plan_trial(const ProtocolScenario& scenario);

struct RunReport {
  std::vector<MeasurementRecord> records;
  ProportionEstimate cross_world_excitation_rate;
  EnergyLedger energy;
  DecoherenceBudget budget;
  ExcitationModel model = ExcitationModel::Feedback;
  double predicted_probability = 0.0;
  double excitation_to_decoherence_ratio = 0.0;
  std::vector<std::string> warnings;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  /// Worker threads; 0 = hardware concurrency. Reports do not depend on it.
  unsigned threads = 1;
};

/// Runs scenario.n_trials independent trials; trial i draws its readout from
/// the stream derive_seed(scenario.seed, i).
RunReport run_protocol(const ProtocolScenario& scenario, const RunOptions& options = {});

struct BitChannelReport {
  std::string sent;
  std::string received;
  double bit_error_rate = 0.0;

  friend bool operator==(const BitChannelReport&, const BitChannelReport&) = default;
};

/// One ion per bit: '1' applies the scenario's branch-1 pulse, '0' applies
/// nothing; the received bit is the branch-2 readout.
BitChannelReport transmit_bits(std::string_view bits, const ProtocolScenario& scenario,
                               const RunOptions& options = {});

/// Pooled F1 fraction with a 95% Wilson score interval.
ProportionEstimate ensemble_statistics(std::span<const RunReport> reports);

}  // namespace gateway
