#include <doctest.h>

#include <cmath>
#include <vector>

#include "gateway/constants.hpp"
#include "gateway/error.hpp"
#include "gateway/protocol.hpp"
#include "random_scenarios.hpp"

using namespace gateway;

namespace {

ProtocolScenario isolated_mwi() {
  ProtocolScenario s = reference_scenario();
  s.trap.pressure = 0.0;
  s.trap.photon_cross_section = 0.0;
  s.trap.confining_field_E_c = 0.0;
  s.model = ExcitationModel::OneAndOnlyOne;
  return s;
}

}  // namespace

TEST_CASE("reference scenario is valid and warns about the long drive") {
  const ProtocolScenario s = reference_scenario();
  CHECK_NOTHROW(validate(s));
  const TrialPlan plan = plan_trial(s);
  CHECK(plan.pumping == Branch::One);
  CHECK(plan.receiver == Branch::Two);
  CHECK(plan.excitation_to_decoherence_ratio ==
        doctest::Approx(std::sqrt(2.0) / 7.291986).epsilon(1e-5));
  CHECK_FALSE(plan.warnings.empty());
  CHECK(plan.p_receiver < plan.p_transfer);
  CHECK(plan.p_transfer <= plan.p_pumped);
}

TEST_CASE("ideal isolation with one interaction transfers every excitation") {
  const ProtocolScenario s = isolated_mwi();
  const TrialPlan plan = plan_trial(s);
  CHECK(plan.environment_coherence == 1.0);
  CHECK(plan.warnings.empty());
  const RunReport r = run_protocol(s);
  CHECK(r.cross_world_excitation_rate.rate == 1.0);
  CHECK(r.cross_world_excitation_rate.successes == s.n_trials);
}

TEST_CASE("ideal isolation under feedback gives the feedback probability") {
  ProtocolScenario s = isolated_mwi();
  s.model = ExcitationModel::Feedback;
  CHECK(plan_trial(s).p_receiver == doctest::Approx(0.7016265257).epsilon(1e-9));
}

TEST_CASE("long waits wash the transfer out") {
  ProtocolScenario s = reference_scenario();
  s.wait_before_readout = 100.0 * 7.291986;
  s.n_trials = 10000;
  const RunReport r = run_protocol(s);
  CHECK(r.cross_world_excitation_rate.rate < 0.01);
}

TEST_CASE("without a pulse nothing is excited") {
  ProtocolScenario s = reference_scenario();
  s.pulse_policy = {};
  const TrialPlan plan = plan_trial(s);
  CHECK_FALSE(plan.pumping.has_value());
  CHECK(plan.p_receiver == 0.0);
  CHECK(plan.energy.universe_balance == 0.0);
  CHECK(run_protocol(s).cross_world_excitation_rate.successes == 0);
}

TEST_CASE("pulse in branch 2 is received in branch 1") {
  ProtocolScenario s = reference_scenario();
  s.pulse_policy = {std::nullopt, make_mwi_pulse(1.0, kBohrMagnetonDipole, kHg199HyperfineOmega,
                                                 Branch::Two)};
  const RunReport r = run_protocol(s);
  CHECK(r.records.front().branch == Branch::One);
}

TEST_CASE("scenario validation") {
  ProtocolScenario s = reference_scenario();
  s.pulse_policy.on_branch2 = s.pulse_policy.on_branch1;
  CHECK_THROWS_AS(validate(s), ValidationError);
  s = reference_scenario();
  s.wait_before_readout = 1.0;  // the MWI pulse lasts sqrt 2 s
  CHECK_THROWS_AS(validate(s), ValidationError);
  s = reference_scenario();
  s.stage_times.t1 = s.stage_times.t2;
  CHECK_THROWS_AS(validate(s), ValidationError);
  s = reference_scenario();
  s.n_trials = 0;
  CHECK_THROWS_AS(validate(s), ValidationError);
}

TEST_CASE("energy balances across 200 random scenarios") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ProtocolScenario s = testgen::random_scenario(i);
    const RunReport r = run_protocol(s);
    INFO("scenario " << i);
    CHECK(r.energy.relative_imbalance() < 1e-12);
    CHECK(r.records.size() == s.n_trials);
  }
}

TEST_CASE("reports depend only on scenario and seed") {
  const ProtocolScenario s = reference_scenario();
  const RunReport a = run_protocol(s, {.threads = 1});
  const RunReport b = run_protocol(s, {.threads = 8});
  CHECK(a == b);
  ProtocolScenario other_seed = s;
  other_seed.seed += 1;
  CHECK(run_protocol(other_seed).records != a.records);
}

TEST_CASE("measure_ion is a Bernoulli draw") {
  Rng rng = make_rng(1, 2);
  CHECK(measure_ion(1.0, rng).readout == Readout::F1);
  CHECK(measure_ion(0.0, rng).readout == Readout::F0);
  CHECK(measure_ion(0.5, rng).coherence_after == 0.0);
  CHECK_THROWS_AS(measure_ion(1.5, rng), ValidationError);
}

TEST_CASE("bit channel") {
  ProtocolScenario s = isolated_mwi();
  const BitChannelReport perfect = transmit_bits("1011001", s);
  CHECK(perfect.received == "1011001");
  CHECK(perfect.bit_error_rate == 0.0);
  const BitChannelReport empty = transmit_bits("", s);
  CHECK(empty.sent.empty());
  CHECK(empty.received.empty());
  CHECK_THROWS_AS(transmit_bits("10a", s), ValidationError);
  CHECK(transmit_bits("110100", reference_scenario(), {.threads = 1}) ==
        transmit_bits("110100", reference_scenario(), {.threads = 4}));
}

TEST_CASE("ensemble statistics pool trials") {
  ProtocolScenario s = reference_scenario();
  s.n_trials = 400;
  std::vector<RunReport> reports;
  for (std::uint64_t k = 0; k < 5; ++k) {
    s.seed = k;
    reports.push_back(run_protocol(s));
  }
  const ProportionEstimate pooled = ensemble_statistics(reports);
  CHECK(pooled.trials == 2000);
  const double p = reports.front().predicted_probability;
  CHECK(std::abs(pooled.rate - p) < 4.0 * std::sqrt(p * (1.0 - p) / 2000.0));
  CHECK(pooled.lower < pooled.rate);
  CHECK(pooled.rate < pooled.upper);
  CHECK_THROWS_AS(ensemble_statistics({}), ValidationError);
}
