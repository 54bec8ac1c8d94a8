#pragma once

#include <cstdint>
#include <functional>

namespace gateway {

/// Streaming mean and variance (Welford), mergeable with Chan's update.
class RunningStats {
 public:
  void push(double x) noexcept;
  void merge(const RunningStats& other) noexcept;

  [[nodiscard]] std::uint64_t count() const noexcept { return n_; }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  [[nodiscard]] double variance() const noexcept;
  [[nodiscard]] double std_error() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

struct ProportionEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const ProportionEstimate&, const ProportionEstimate&) = default;
};

/// Wilson score interval for a binomial proportion.
ProportionEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                   double z = kZ95);

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Work is handed out in index order; callers own the output slot
/// for each index, so results never depend on scheduling.
void parallel_for(std::uint64_t count, unsigned threads,
                  const std::function<void(std::uint64_t)>& body);

}  // namespace gateway
