#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gateway/decoherence.hpp"

namespace gateway {

/// Collision radius used when a caller does not choose one. The ensemble mean
/// does not depend on it.
inline constexpr double kDefaultSamplingRadius = 1.0e-3;  // m
inline constexpr std::size_t kDefaultTrajectorySteps = 100;

struct TrajectoryPoint {
  double time = 0.0;       // s
  double coherence = 1.0;  // |c|
  double phase = 0.0;      // arg c, rad

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct PhaseKickOptions {
  double radius = kDefaultSamplingRadius;
  /// Segments expecting more collisions than this are advanced in aggregate:
  /// the collision count is drawn from the normal limit of the Poisson law and
  /// the summed log-kicks from their complex-normal limit. Smaller segments
  /// apply every kick explicitly.
  double explicit_collision_limit = 1.0e4;
};

/// Collision rate 4 pi r^2 phi (1 + f^2/r^2). With each kick multiplying the
/// coherence by (1 + x e^{i dphi}) / (1 + x), x = f^2/r^2, the expected
/// coherence after time t is exactly exp(-sigma phi t).
double phase_kick_collision_rate(const ScatteringChannel& channel, double radius);

/// Complex coherence of one trajectory recorded at sorted, nonnegative
/// `checkpoints`. Deterministic in `seed`.
std::vector<TrajectoryPoint> sample_phase_kick_trajectory(const ScatteringChannel& channel,
                                                          std::span<const double> checkpoints,
                                                          std::uint64_t seed,
                                                          const PhaseKickOptions& options = {});

/// Uniform grid of kDefaultTrajectorySteps intervals over [0, duration];
/// duration 0 yields the single point (0, 1).
std::vector<TrajectoryPoint> sample_phase_kick_trajectory(const ScatteringChannel& channel,
                                                          double radius, double duration,
                                                          std::uint64_t seed);

struct EnsemblePoint {
  double time = 0.0;
  double mean_coherence = 0.0;   // mean of |c|
  double std_error = 0.0;        // of mean_coherence
  double mean_real = 0.0;        // mean of Re c
  double std_error_real = 0.0;
  double closed_form = 0.0;      // exp(-sigma phi t)
};

/// Statistics over `n_trajectories` trajectories; trajectory k uses the stream
/// derive_seed(seed, k), so the result is independent of `threads`.
std::vector<EnsemblePoint> phase_kick_ensemble(const ScatteringChannel& channel,
                                               std::span<const double> checkpoints,
                                               std::uint64_t n_trajectories, std::uint64_t seed,
                                               const PhaseKickOptions& options = {},
                                               unsigned threads = 0);

}  // namespace gateway
