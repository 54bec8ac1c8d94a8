#pragma once

// Reference values computed independently at 50 significant digits, and a
// quadrature oracle that shares no code with the library.

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

inline constexpr double kRestGasFluxTorr = 5.71404e16;       // m^-2 s^-1, 1e-9 torr, 300 K, H2
inline constexpr double kRestGasDtTorr = 7.291986;           // s
inline constexpr double kRestGasFluxNbar = 4.28588e19;       // 1e-4 Pa
inline constexpr double kRestGasDtNbar = 9.72185e-3;         // s
inline constexpr double kDipole = 3.0934768e-32;             // mu_B / c
inline constexpr double kPiField1s = 1.07097460e-2;          // V/m, t_p = 1 s
inline constexpr double kMicrowaveFluxPiField = 7.12847e16;  // at E_pi, omega 4.05e10
inline constexpr double kMicrowaveDt1s = 2.6977398e22;       // s
inline constexpr double kMicrowaveDt2s = 1.0790959e23;       // s
inline constexpr double kTrapFieldDtUnit = 76.40176;         // s, f_v = 1
inline constexpr double kTrapFieldDtRef = 7.640176e21;       // s, f_v = 1e-10
inline constexpr double kMixingTime = 9.96066e-16;           // s
inline constexpr double kSingleCollisionDeficit = 1.909859e-13;  // sigma 2.4e-18, r 1e-3
inline constexpr double kMillionthPowMillion = 0.367879257;  // (1 - 1e-6)^1e6
inline constexpr double kFeedbackMwiPi = 0.7016265257;       // sin^2((pi/2)(1 - 1/e))

inline double relative(double computed, double expected) {
  return std::abs(computed - expected) / std::abs(expected);
}

namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-13, int max_depth = 50) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Feedback excitation probability by direct quadrature of nu exp(-rate t).
inline double feedback_probability(double nu, double duration, double rate) {
  const double theta = simpson([&](double t) { return nu * std::exp(-rate * t); }, 0.0, duration,
                               1e-14 * std::max(1.0, nu * duration));
  const double s = std::sin(theta);
  return s * s;
}

}  // namespace oracle
