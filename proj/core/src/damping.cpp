#include "gateway/damping.hpp"

#include <fmt/format.h>

#include "gateway/error.hpp"

namespace gateway {

DampingFactor DampingFactor::from_value(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(fmt::format("damping factor must lie in [0,1], got {}", value));
  }
  return from_log(std::log(value));
}

DampingFactor DampingFactor::from_deficit(double deficit) {
  if (!(deficit >= 0.0 && deficit <= 1.0)) {
    throw ValidationError(fmt::format("damping deficit must lie in [0,1], got {}", deficit));
  }
  return from_log(std::log1p(-deficit));
}

DampingFactor DampingFactor::from_log(double log_value) {
  if (std::isnan(log_value) || log_value > 0.0) {
    throw ValidationError(fmt::format("log damping must be <= 0, got {}", log_value));
  }
  DampingFactor out;
  out.log_ = log_value;
  return out;
}

DampingFactor DampingFactor::pow(std::uint64_t n) const noexcept {
  DampingFactor out;
  if (n == 0) return out;
  out.log_ = log_ * static_cast<double>(n);
  return out;
}

DecoherenceTime DecoherenceTime::from_rate(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw ValidationError(fmt::format("decoherence rate must be finite and >= 0, got {}", rate));
  }
  DecoherenceTime out;
  out.rate_ = rate;
  return out;
}

DecoherenceTime DecoherenceTime::from_seconds(double seconds) {
  if (!(seconds > 0.0)) {
    throw ValidationError(fmt::format("decoherence time must be > 0, got {}", seconds));
  }
  if (std::isinf(seconds)) return none();
  return from_rate(1.0 / seconds);
}

}  // namespace gateway
