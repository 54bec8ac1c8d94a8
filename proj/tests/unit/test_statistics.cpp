#include <doctest.h>

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gateway/random.hpp"
#include "gateway/statistics.hpp"

using namespace gateway;

TEST_CASE("running stats match the two-pass formulas") {
  const std::vector<double> xs{1.0, 2.0, 4.0, 8.0, 16.0};
  RunningStats s;
  for (double x : xs) s.push(x);
  CHECK(s.count() == 5);
  CHECK(s.mean() == doctest::Approx(6.2));
  CHECK(s.variance() == doctest::Approx(37.2));
  CHECK(s.std_error() == doctest::Approx(std::sqrt(37.2 / 5)));
}

TEST_CASE("merging equals streaming") {
  RunningStats all;
  RunningStats a;
  RunningStats b;
  for (int i = 0; i < 100; ++i) {
    const double x = std::sin(i) * 10.0;
    all.push(x);
    (i < 37 ? a : b).push(x);
  }
  a.merge(b);
  CHECK(a.count() == all.count());
  CHECK(a.mean() == doctest::Approx(all.mean()).epsilon(1e-13));
  CHECK(a.variance() == doctest::Approx(all.variance()).epsilon(1e-13));
  RunningStats empty;
  empty.merge(all);
  CHECK(empty.mean() == all.mean());
}

TEST_CASE("Wilson interval") {
  const auto e = wilson_interval(163, 1000);
  CHECK(e.rate == doctest::Approx(0.163));
  CHECK(e.lower == doctest::Approx(0.14140399765906392).epsilon(1e-12));
  CHECK(e.upper == doctest::Approx(0.18717523756020027).epsilon(1e-12));
  const auto none = wilson_interval(0, 50);
  CHECK(none.lower == 0.0);
  CHECK(none.upper > 0.0);
  const auto all = wilson_interval(50, 50);
  CHECK(all.upper == 1.0);
  CHECK(all.lower < 1.0);
}

TEST_CASE("Wilson interval covers p = 0.163 at the nominal rate") {
  const double p = 0.163;
  int covered = 0;
  for (std::uint64_t rep = 0; rep < 1000; ++rep) {
    Rng rng = make_rng(777, rep);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uint64_t k = 0;
    for (int i = 0; i < 100; ++i) k += u(rng) < p;
    const auto e = wilson_interval(k, 100);
    covered += e.lower <= p && p <= e.upper;
  }
  CHECK(covered >= 930);
}

TEST_CASE("derived seeds are distinct and stable") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 9) == derive_seed(5, 9));
  static_assert(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 8, [&](std::uint64_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::uint64_t i) {
                                 if (i == 42) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  CHECK_NOTHROW(parallel_for(0, 4, [](std::uint64_t) {}));
}
