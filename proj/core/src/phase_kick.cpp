#include "gateway/phase_kick.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <fmt/format.h>

#include "gateway/error.hpp"
#include "gateway/random.hpp"
#include "gateway/statistics.hpp"

namespace gateway {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kEnsembleChunk = 1024;

// E|log(1 + x e^{i phi})|^2 for uniform phi, i.e. Li2(x^2), by its series.
double log_kick_second_moment(double x) {
  const double x2 = x * x;
  double term = x2;
  double sum = 0.0;
  for (int k = 1; k < 200 && term > 1e-18 * sum; ++k) {
    sum += term / (static_cast<double>(k) * k);
    term *= x2;
  }
  return sum;
}

class TrajectorySampler {
 public:
  TrajectorySampler(const ScatteringChannel& channel, const PhaseKickOptions& options,
                    std::uint64_t seed)
      : x_(dilute_ratio(channel.cross_section, options.radius)),
        rate_(phase_kick_collision_rate(channel, options.radius)),
        log_norm_(std::log1p(x_)),
        log_kick_sd_(std::sqrt(0.5 * log_kick_second_moment(x_))),
        limit_(options.explicit_collision_limit),
        rng_(seed) {}

  // Advances the coherence over dt and returns it.
  std::complex<double> advance(double dt) {
    const double expected = rate_ * dt;
    if (expected <= 0.0) return c_;
    if (expected <= limit_) {
      apply_explicit(static_cast<std::uint64_t>(std::poisson_distribution<std::int64_t>(expected)(rng_)));
    } else {
      apply_aggregate(expected);
    }
    return c_;
  }

 private:
  void apply_explicit(std::uint64_t n) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    for (std::uint64_t k = 0; k < n; ++k) {
      c_ *= (1.0 + x_ * std::polar(1.0, phase(rng_))) / (1.0 + x_);
    }
  }

  void apply_aggregate(double expected) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double count = std::max(0.0, std::round(expected + std::sqrt(expected) * normal(rng_)));
    // Each log-kick log(1 + x e^{i phi}) has zero mean; the sum of `count`
    // of them is complex normal with per-component variance count * Li2(x^2) / 2.
    const double sd = log_kick_sd_ * std::sqrt(count);
    const std::complex<double> summed_kicks{sd * normal(rng_), sd * normal(rng_)};
    c_ *= std::exp(summed_kicks - count * log_norm_);
  }

  double x_;
  double rate_;
  double log_norm_;
  double log_kick_sd_;
  double limit_;
  Rng rng_;
  std::complex<double> c_{1.0, 0.0};
};

void check_checkpoints(std::span<const double> checkpoints) {
  double previous = 0.0;
  for (double t : checkpoints) {
    if (!(t >= previous) || !std::isfinite(t)) {
      throw ValidationError("phase-kick checkpoints must be finite, nonnegative and sorted");
    }
    previous = t;
  }
}

}  // namespace

double phase_kick_collision_rate(const ScatteringChannel& channel, double radius) {
  validate(channel);
  const double x = dilute_ratio(channel.cross_section, radius);
  if (channel.cross_section == 0.0) return 0.0;
  return 4.0 * std::numbers::pi * radius * radius * channel.flux * (1.0 + x);
}

std::vector<TrajectoryPoint> sample_phase_kick_trajectory(const ScatteringChannel& channel,
                                                          std::span<const double> checkpoints,
                                                          std::uint64_t seed,
                                                          const PhaseKickOptions& options) {
  check_checkpoints(checkpoints);
  TrajectorySampler sampler(channel, options, seed);
  std::vector<TrajectoryPoint> out;
  out.reserve(checkpoints.size());
  double now = 0.0;
  for (double t : checkpoints) {
    const std::complex<double> c = sampler.advance(t - now);
    now = t;
    out.push_back({t, std::abs(c), std::arg(c)});
  }
  return out;
}

std::vector<TrajectoryPoint> sample_phase_kick_trajectory(const ScatteringChannel& channel,
                                                          double radius, double duration,
                                                          std::uint64_t seed) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw ValidationError(fmt::format("trajectory duration must be >= 0, got {}", duration));
  }
  std::vector<double> grid{0.0};
  if (duration > 0.0) {
    for (std::size_t k = 1; k <= kDefaultTrajectorySteps; ++k) {
      grid.push_back(duration * static_cast<double>(k) / kDefaultTrajectorySteps);
    }
  }
  return sample_phase_kick_trajectory(channel, grid, seed, PhaseKickOptions{.radius = radius});
}

std::vector<EnsemblePoint> phase_kick_ensemble(const ScatteringChannel& channel,
                                               std::span<const double> checkpoints,
                                               std::uint64_t n_trajectories, std::uint64_t seed,
                                               const PhaseKickOptions& options, unsigned threads) {
  check_checkpoints(checkpoints);
  if (n_trajectories == 0) throw ValidationError("phase_kick_ensemble: need >= 1 trajectory");
  // Fail fast on an invalid radius before spawning workers.
  (void)phase_kick_collision_rate(channel, options.radius);

  struct ChunkStats {
    std::vector<RunningStats> magnitude;
    std::vector<RunningStats> real;
  };
  const std::uint64_t n_chunks = (n_trajectories + kEnsembleChunk - 1) / kEnsembleChunk;
  std::vector<ChunkStats> chunks(n_chunks);

  parallel_for(n_chunks, threads, [&](std::uint64_t chunk) {
    ChunkStats stats{std::vector<RunningStats>(checkpoints.size()),
                     std::vector<RunningStats>(checkpoints.size())};
    const std::uint64_t first = chunk * kEnsembleChunk;
    const std::uint64_t last = std::min(n_trajectories, first + kEnsembleChunk);
    for (std::uint64_t k = first; k < last; ++k) {
      const auto trajectory =
          sample_phase_kick_trajectory(channel, checkpoints, derive_seed(seed, k), options);
      for (std::size_t j = 0; j < trajectory.size(); ++j) {
        stats.magnitude[j].push(trajectory[j].coherence);
        stats.real[j].push(trajectory[j].coherence * std::cos(trajectory[j].phase));
      }
    }
    chunks[chunk] = std::move(stats);
  });

  std::vector<EnsemblePoint> out(checkpoints.size());
  for (std::size_t j = 0; j < checkpoints.size(); ++j) {
    RunningStats magnitude;
    RunningStats real;
    for (const auto& chunk : chunks) {
      magnitude.merge(chunk.magnitude[j]);
      real.merge(chunk.real[j]);
    }
    out[j] = EnsemblePoint{.time = checkpoints[j],
                           .mean_coherence = magnitude.mean(),
                           .std_error = magnitude.std_error(),
                           .mean_real = real.mean(),
                           .std_error_real = real.std_error(),
                           .closed_form = damping_at_time(channel, checkpoints[j])};
  }
  return out;
}

}  // namespace gateway
