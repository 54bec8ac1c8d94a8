#include <benchmark/benchmark.h>

#include <vector>

#include "gateway/decoherence.hpp"
#include "gateway/drive.hpp"
#include "gateway/phase_kick.hpp"
#include "gateway/protocol.hpp"
#include "gateway/scenario.hpp"

namespace {

using namespace gateway;

void BM_DecoherenceBudget(benchmark::State& state) {
  const ProtocolScenario s = reference_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoherence_budget(s.trap, s.pulse_policy.on_branch1));
  }
}
BENCHMARK(BM_DecoherenceBudget);

void BM_FeedbackExcitation(benchmark::State& state) {
  const PulseSpec mwi = make_mwi_pulse(1.0, kBohrMagnetonDipole, kHg199HyperfineOmega);
  for (auto _ : state) benchmark::DoNotOptimize(feedback_excitation(mwi));
}
BENCHMARK(BM_FeedbackExcitation);

void BM_PhaseKickEnsemble(benchmark::State& state) {
  const ScatteringChannel channel = rest_gas_channel(reference_trap_config());
  const std::vector<double> checkpoints{0.25 / channel.rate(), 0.5 / channel.rate(),
                                        1.0 / channel.rate(), 2.0 / channel.rate(),
                                        4.0 / channel.rate()};
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_kick_ensemble(channel, checkpoints, n, 1, {}, threads));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_PhaseKickEnsemble)
    ->Args({10000, 1})
    ->Args({10000, 0})
    ->Args({100000, 0})
    ->Unit(benchmark::kMillisecond);

void BM_ExplicitKickTrajectory(benchmark::State& state) {
  // ~126 collisions per second, all applied one by one.
  const ScatteringChannel channel{"coarse", 1e-3, 1e3};
  const std::vector<double> checkpoints{1.0, 2.0, 4.0};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_phase_kick_trajectory(channel, checkpoints, seed++, {.radius = 0.1}));
  }
}
BENCHMARK(BM_ExplicitKickTrajectory);

void BM_RunProtocol(benchmark::State& state) {
  ProtocolScenario s = reference_scenario();
  s.n_trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(s, {.threads = 1}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.n_trials));
}
BENCHMARK(BM_RunProtocol)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ScenarioRoundTrip(benchmark::State& state) {
  const std::string text = serialize_scenario(reference_scenario());
  for (auto _ : state) benchmark::DoNotOptimize(parse_scenario_text(text));
}
BENCHMARK(BM_ScenarioRoundTrip);

}  // namespace

BENCHMARK_MAIN();
