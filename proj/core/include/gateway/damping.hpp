#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace gateway {

/// Multiplicative damping of an off-diagonal element, a value in [0,1].
///
/// Stored as its natural logarithm. Per-collision factors sit within 1e-13 of
/// unity (or closer); as plain doubles `1 - 1e-17 == 1`, and raising them to
/// 1e14 collisions would lose every digit. In log form composition is exact to
/// rounding of the exponent.
class DampingFactor {
 public:
  constexpr DampingFactor() = default;

  static DampingFactor from_value(double value);
  /// Factor 1 - deficit, computed without cancellation.
  static DampingFactor from_deficit(double deficit);
  static DampingFactor from_log(double log_value);
  static constexpr DampingFactor none() { return DampingFactor{}; }

  [[nodiscard]] double value() const noexcept { return std::exp(log_); }
  /// 1 - value(), accurate for factors close to one.
  [[nodiscard]] double deficit() const noexcept { return -std::expm1(log_); }
  [[nodiscard]] double log_value() const noexcept { return log_; }

  [[nodiscard]] DampingFactor pow(std::uint64_t n) const noexcept;

  friend DampingFactor operator*(DampingFactor a, DampingFactor b) noexcept {
    DampingFactor out;
    out.log_ = a.log_ + b.log_;
    return out;
  }
  friend bool operator==(const DampingFactor&, const DampingFactor&) = default;

 private:
  double log_ = 0.0;  // <= 0; -inf encodes complete damping
};

/// A decoherence time 1/rate, or the distinguished "no decoherence" value when
/// the rate is zero.
class DecoherenceTime {
 public:
  static DecoherenceTime from_rate(double rate);
  static DecoherenceTime from_seconds(double seconds);
  static constexpr DecoherenceTime none() { return DecoherenceTime{}; }

  [[nodiscard]] bool decoheres() const noexcept { return rate_ > 0.0; }
  /// +infinity when nothing decoheres.
  [[nodiscard]] double seconds() const noexcept {
    return decoheres() ? 1.0 / rate_ : std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] double rate() const noexcept { return rate_; }

  friend bool operator==(const DecoherenceTime&, const DecoherenceTime&) = default;

 private:
  constexpr DecoherenceTime() = default;
  double rate_ = 0.0;  // s^-1
};

}  // namespace gateway
