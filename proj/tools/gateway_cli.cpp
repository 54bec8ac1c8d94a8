#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gateway/error.hpp"
#include "gateway/phase_kick.hpp"
#include "gateway/protocol.hpp"
#include "gateway/report.hpp"
#include "gateway/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string format = "text";
  std::string out_dir;
  std::string model;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

void add_common(CLI::App& cmd, CommonOptions& opts, bool with_model = true,
                bool with_seed = true) {
  cmd.add_option("--format", opts.format, "Output printed to stdout")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  cmd.add_option("--out", opts.out_dir, "Also write <name>.csv and <name>.txt into this directory");
  if (with_model) {
    cmd.add_option("--model", opts.model, "Override the scenario's excitation model")
        ->check(CLI::IsMember({"feedback", "one-interaction"}));
  }
  if (with_seed) cmd.add_option("--seed", opts.seed, "Override the scenario's seed");
}

gateway::ProtocolScenario load(const std::string& path, const CommonOptions& opts) {
  gateway::ProtocolScenario scenario = gateway::parse_scenario(path);
  if (!opts.model.empty()) scenario.model = *gateway::parse_excitation_model(opts.model);
  if (opts.seed) scenario.seed = *opts.seed;
  return scenario;
}

template <class Report>
void deliver(const Report& report, const CommonOptions& opts, std::string_view stem) {
  const auto format = gateway::parse_report_format(opts.format).value_or(gateway::ReportFormat::Text);
  const std::string text =
      format == gateway::ReportFormat::Csv ? gateway::to_csv(report) : gateway::to_text(report);
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!opts.out_dir.empty()) {
    const auto files = gateway::emit_report(report, opts.out_dir, stem);
    fmt::print(stderr, "wrote {} and {}\n", files.csv.string(), files.text.string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inter-world excitation transfer: decoherence budget and protocol simulator",
               "gateway"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gateway 0.1.0");

  std::string scenario_path;
  std::string bits;
  std::uint64_t n_trajectories = 1000;
  std::size_t n_points = 11;
  double radius = gateway::kDefaultSamplingRadius;
  CommonOptions opts;

  auto* budget = app.add_subcommand("budget", "Decoherence-time table for a scenario");
  budget->add_option("scenario", scenario_path, "Scenario file")->required();
  add_common(*budget, opts, false, false);

  auto* run = app.add_subcommand("run", "Monte Carlo of the protocol");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  add_common(*run, opts);

  auto* channel = app.add_subcommand("channel", "Send a bit string, one ion per bit");
  channel->add_option("scenario", scenario_path, "Scenario file")->required();
  channel->add_option("--bits", bits, "Bits to send, e.g. 1011")
      ->required()
      ->check([](const std::string& s) {
        return s.find_first_not_of("01") == std::string::npos ? std::string{}
                                                             : std::string{"bits must be 0 or 1"};
      });
  channel->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  add_common(*channel, opts);

  auto* table = app.add_subcommand("paper-table", "Regression table of reference numbers");
  add_common(*table, opts, false, false);

  auto* trajectories =
      app.add_subcommand("trajectories", "Phase-kick ensemble for the rest-gas channel");
  trajectories->add_option("scenario", scenario_path, "Scenario file")->required();
  trajectories->add_option("--n", n_trajectories, "Number of trajectories")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  trajectories->add_option("--points", n_points, "Checkpoints over [0, wait_before_readout]")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
      ->capture_default_str();
  trajectories->add_option("--radius", radius, "Collision sampling radius [m]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  trajectories->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  add_common(*trajectories, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (budget->parsed()) {
      const auto scenario = load(scenario_path, opts);
      const auto& p = scenario.pulse_policy;
      deliver(gateway::decoherence_budget(scenario.trap, p.on_branch1 ? p.on_branch1 : p.on_branch2),
              opts, "budget");
    } else if (run->parsed()) {
      const auto scenario = load(scenario_path, opts);
      const auto report = gateway::run_protocol(scenario, {.threads = opts.threads});
      if (opts.format == "csv") {
        for (const auto& w : report.warnings) fmt::print(stderr, "warning: {}\n", w);
      }
      deliver(report, opts, "run");
    } else if (channel->parsed()) {
      const auto scenario = load(scenario_path, opts);
      deliver(gateway::transmit_bits(bits, scenario, {.threads = opts.threads}), opts, "channel");
    } else if (table->parsed()) {
      deliver(gateway::reproduce_paper_table(), opts, "paper_table");
    } else if (trajectories->parsed()) {
      const auto scenario = load(scenario_path, opts);
      std::vector<double> checkpoints(n_points);
      for (std::size_t i = 0; i < n_points; ++i) {
        checkpoints[i] = scenario.wait_before_readout * static_cast<double>(i) /
                         static_cast<double>(n_points - 1);
      }
      const auto ensemble = gateway::phase_kick_ensemble(
          gateway::rest_gas_channel(scenario.trap), checkpoints, n_trajectories, scenario.seed,
          {.radius = radius}, opts.threads);
      deliver(std::span<const gateway::EnsemblePoint>(ensemble), opts, "trajectories");
    }
  } catch (const gateway::ScenarioError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return e.kind() == gateway::ScenarioErrorKind::MissingFile ? kExitIo : kExitValidation;
  } catch (const gateway::ValidationError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const gateway::IoError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return 1;
  }
  return kExitOk;
}
