#include "gateway/protocol.hpp"

#include <cmath>

#include <fmt/format.h>

#include "gateway/error.hpp"

namespace gateway {
namespace {

constexpr double kExcitationWarningRatio = 0.1;

std::optional<Branch> pumping_branch(const PulsePolicy& policy) {
  if (policy.on_branch1 && policy.on_branch2) {
    throw ValidationError("pulse policy: at most one branch may drive the ion");
  }
  if (policy.on_branch1) return Branch::One;
  if (policy.on_branch2) return Branch::Two;
  return std::nullopt;
}

const std::optional<PulseSpec>& pulse_for(const PulsePolicy& policy, Branch branch) {
  return branch == Branch::One ? policy.on_branch1 : policy.on_branch2;
}

}  // namespace

std::string_view to_string(Readout readout) noexcept {
  return readout == Readout::F1 ? "F1" : "F0";
}

void validate(const ProtocolScenario& s) {
  validate(s.trap);
  const auto& t = s.stage_times;
  if (!(t.t0 >= 0.0 && t.t0 < t.t1 && t.t1 < t.t2) || !std::isfinite(t.t2)) {
    throw ValidationError(fmt::format("stage times must satisfy 0 <= t0 < t1 < t2, got {}, {}, {}",
                                      t.t0, t.t1, t.t2));
  }
  if (!(s.wait_before_readout > 0.0) || !std::isfinite(s.wait_before_readout)) {
    throw ValidationError(
        fmt::format("wait_before_readout must be > 0, got {}", s.wait_before_readout));
  }
  if (s.n_trials < 1) throw ValidationError("n_trials must be >= 1");
  if (!(s.photon_split >= 0.0 && s.photon_split <= 1.0)) {
    throw ValidationError(fmt::format("photon_split must lie in [0,1], got {}", s.photon_split));
  }
  if (!(s.hyperfine_frequency > 0.0) || !std::isfinite(s.hyperfine_frequency)) {
    throw ValidationError("hyperfine_frequency must be > 0");
  }
  const auto pump = pumping_branch(s.pulse_policy);
  if (pump) {
    const PulseSpec& pulse = *pulse_for(s.pulse_policy, *pump);
    validate(pulse);
    if (!(pulse.duration < s.wait_before_readout)) {
      throw ValidationError(fmt::format(
          "pulse of {} s in {} does not end before the readout at t2 + {} s", pulse.duration,
          to_string(*pump), s.wait_before_readout));
    }
  }
}

ProtocolScenario reference_scenario() {
  ProtocolScenario s;
  s.trap = reference_trap_config();
  s.pulse_policy.on_branch1 =
      make_mwi_pulse(1.0, kBohrMagnetonDipole, kHg199HyperfineOmega, Branch::One);
  s.wait_before_readout = 2.0;
  s.n_trials = 1000;
  s.seed = 20240601;
  return s;
}

MeasurementOutcome measure_ion(double probability_p, Rng& rng) {
  if (!(probability_p >= 0.0 && probability_p <= 1.0)) {
    throw ValidationError(fmt::format("readout probability must lie in [0,1], got {}", probability_p));
  }
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  return {uniform(rng) < probability_p ? Readout::F1 : Readout::F0, 0.0};
}

TrialPlan plan_trial(const ProtocolScenario& scenario) {
  validate(scenario);
  TrialPlan plan;

  std::optional<Branch> pump = pumping_branch(scenario.pulse_policy);
  std::optional<PulseSpec> pulse;
  if (pump) pulse = pulse_for(scenario.pulse_policy, *pump);

  const auto& times = scenario.stage_times;
  BranchedState state = initial_state(scenario.photon_split, times.t0);
  state = advance_stage(state, {Stage::T1, times.t1});
  state = advance_stage(state, {Stage::T2, times.t2});

  // A drive in a world that carries no weight never happens.
  if (pump) {
    const auto [w1, w2] = branch_probabilities(state);
    if ((*pump == Branch::One ? w1 : w2) == 0.0) {
      pump.reset();
      pulse.reset();
    }
  }
  plan.pumping = pump;
  plan.receiver = pump ? other(*pump) : Branch::Two;

  plan.budget = decoherence_budget(scenario.trap, pulse);
  const double rate_during_pulse = plan.budget.combined.rate();
  const double rate_quiet = plan.budget.without_pulse().rate();
  const double pulse_time = pulse ? pulse->duration : 0.0;
  const double quiet_time = scenario.wait_before_readout - pulse_time;

  plan.excitation_to_decoherence_ratio = pulse_time * rate_during_pulse;
  if (plan.excitation_to_decoherence_ratio >= kExcitationWarningRatio) {
    plan.warnings.push_back(fmt::format(
        "excitation window is not short against decoherence: dt_exc / dt_dec = {:.6g}",
        plan.excitation_to_decoherence_ratio));
  }

  plan.environment_coherence =
      std::exp(-(rate_during_pulse * pulse_time + rate_quiet * quiet_time));

  state = advance_stage(state, {Stage::ExcitationWindow, times.t2 + pulse_time});
  if (pulse) {
    plan.p_pumped = rabi_probability(*pulse);
    plan.p_transfer =
        scenario.model == ExcitationModel::OneAndOnlyOne
            ? one_interaction_excitation(*pulse).probability_p
            : feedback_excitation(*pulse, excitation_decoherence_rate(*pulse) + rate_during_pulse)
                  .probability_p;
    // The other world sees the excitation only while the relative states of the
    // ion still overlap.
    plan.p_receiver = plan.p_transfer * plan.environment_coherence;
    state = apply_excitation(state, *pump, plan.p_pumped, plan.p_receiver);
    state = damp_coherence(state, excitation_damping(*pulse) *
                                      std::exp(-rate_during_pulse * pulse_time));
  }
  state = advance_stage(state, {Stage::T3, times.t2 + scenario.wait_before_readout});
  state = damp_coherence(state, std::exp(-rate_quiet * quiet_time));
  validate(state);

  plan.energy = energy_ledger(state, scenario.hyperfine_frequency);
  plan.final_state = state;
  return plan;
}

RunReport run_protocol(const ProtocolScenario& scenario, const RunOptions& options) {
  const TrialPlan plan = plan_trial(scenario);

  RunReport report;
  report.records.resize(scenario.n_trials);
  parallel_for(scenario.n_trials, options.threads, [&](std::uint64_t trial) {
    Rng rng = make_rng(scenario.seed, trial);
    const MeasurementOutcome outcome = measure_ion(plan.p_receiver, rng);
    report.records[trial] = {trial, plan.receiver, outcome.readout,
                             plan.final_state.coherence_factor};
  });

  std::uint64_t excited = 0;
  for (const auto& record : report.records) excited += record.readout_state == Readout::F1;
  report.cross_world_excitation_rate = wilson_interval(excited, scenario.n_trials);
  report.energy = plan.energy;
  report.budget = plan.budget;
  report.model = scenario.model;
  report.predicted_probability = plan.p_receiver;
  report.excitation_to_decoherence_ratio = plan.excitation_to_decoherence_ratio;
  report.warnings = plan.warnings;
  return report;
}

BitChannelReport transmit_bits(std::string_view bits, const ProtocolScenario& scenario,
                               const RunOptions& options) {
  for (char bit : bits) {
    if (bit != '0' && bit != '1') {
      throw ValidationError(fmt::format("bit string may contain only 0 and 1, found '{}'", bit));
    }
  }
  BitChannelReport report;
  report.sent = std::string(bits);
  report.received.assign(bits.size(), '0');
  if (bits.empty()) return report;

  if (!scenario.pulse_policy.on_branch1) {
    throw ValidationError("transmit_bits: scenario defines no branch-1 pulse to encode a 1");
  }
  ProtocolScenario one = scenario;
  one.pulse_policy = {scenario.pulse_policy.on_branch1, std::nullopt};
  ProtocolScenario zero = scenario;
  zero.pulse_policy = {};
  const double p_one = plan_trial(one).p_receiver;
  const double p_zero = plan_trial(zero).p_receiver;

  parallel_for(bits.size(), options.threads, [&](std::uint64_t i) {
    Rng rng = make_rng(scenario.seed, i);
    const double p = bits[i] == '1' ? p_one : p_zero;
    report.received[i] = measure_ion(p, rng).readout == Readout::F1 ? '1' : '0';
  });

  std::size_t errors = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) errors += report.sent[i] != report.received[i];
  report.bit_error_rate = static_cast<double>(errors) / static_cast<double>(bits.size());
  return report;
}

ProportionEstimate ensemble_statistics(std::span<const RunReport> reports) {
  if (reports.empty()) throw ValidationError("ensemble_statistics: no reports");
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  for (const auto& report : reports) {
    for (const auto& record : report.records) {
      successes += record.readout_state == Readout::F1;
    }
    trials += report.records.size();
  }
  if (trials == 0) throw ValidationError("ensemble_statistics: reports contain no trials");
  return wilson_interval(successes, trials);
}

}  // namespace gateway
