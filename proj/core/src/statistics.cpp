#include "gateway/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "gateway/error.hpp"

namespace gateway {

void RunningStats::push(double x) noexcept {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double total = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  n_ += other.n_;
}

double RunningStats::variance() const noexcept {
  return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::std_error() const noexcept {
  return n_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

ProportionEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw ValidationError("wilson_interval: no trials");
  if (successes > trials) throw ValidationError("wilson_interval: successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;

  ProportionEstimate out{successes, trials, p, std::max(0.0, centre - half),
                         std::min(1.0, centre + half)};
  // Pin the closed ends so the point estimate always lies inside the interval.
  if (successes == 0) out.lower = 0.0;
  if (successes == trials) out.upper = 1.0;
  return out;
}

void parallel_for(std::uint64_t count, unsigned threads,
                  const std::function<void(std::uint64_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gateway
