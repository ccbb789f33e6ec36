#pragma once

// Explicit Runge-Kutta drivers shared by the Bloch and amplitude integrators.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sunlie/dynamics.hpp"

namespace sunlie::detail {

template <class State>
struct Sample {
  double time;
  State value;
};

template <class State, class Rhs>
State rk4_step(const Rhs& rhs, const State& y, double h) {
  const State k1 = rhs(y);
  const State k2 = rhs(State(y + 0.5 * h * k1));
  const State k3 = rhs(State(y + 0.5 * h * k2));
  const State k4 = rhs(State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <class State, class Rhs>
std::vector<Sample<State>> integrate_rk4(const Rhs& rhs, State y, const IntegrationSpec& spec) {
  const auto steps = static_cast<long long>(std::ceil(spec.t_final / spec.dt - 1e-9));
  std::vector<Sample<State>> out;
  out.reserve(static_cast<std::size_t>(steps / spec.output_stride + 2));
  out.push_back({0.0, y});
  double t = 0.0;
  for (long long step = 1; step <= steps; ++step) {
    const double t_next = step == steps ? spec.t_final : static_cast<double>(step) * spec.dt;
    y = rk4_step(rhs, y, t_next - t);
    t = t_next;
    if (step % spec.output_stride == 0 || step == steps) out.push_back({t, y});
  }
  return out;
}

// Dormand-Prince 5(4) with local extrapolation, landing exactly on each
// output time. Stage times are dropped: every right-hand side here is autonomous.
template <class State, class Rhs>
std::vector<Sample<State>> integrate_rk45(const Rhs& rhs, State y, const IntegrationSpec& spec) {
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double spacing = spec.dt * spec.output_stride;
  const auto outputs = static_cast<long long>(std::ceil(spec.t_final / spacing - 1e-9));

  std::vector<Sample<State>> out;
  out.push_back({0.0, y});
  double t = 0.0;
  double h = spec.dt;
  State k1 = rhs(y);
  for (long long o = 1; o <= outputs; ++o) {
    const double target = o == outputs ? spec.t_final : static_cast<double>(o) * spacing;
    while (t < target) {
      const bool last = t + h >= target;
      const double step = last ? target - t : h;
      const State k2 = rhs(State(y + step * (a21 * k1)));
      const State k3 = rhs(State(y + step * (a31 * k1 + a32 * k2)));
      const State k4 = rhs(State(y + step * (a41 * k1 + a42 * k2 + a43 * k3)));
      const State k5 = rhs(State(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
      const State k6 = rhs(State(y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
      const State y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const State k7 = rhs(y_new);
      const State err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double ratio = 0.0;
      for (Eigen::Index c = 0; c < y.size(); ++c) {
        const double scale = spec.abs_tol + spec.rel_tol * std::max(std::abs(y[c]), std::abs(y_new[c]));
        ratio = std::max(ratio, std::abs(err[c]) / scale);
      }
      const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
      if (ratio <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k1 = k7;
        if (!last) h = step * factor;
      } else {
        h = step * factor;
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
          throw StepSizeUnderflow("adaptive step size underflow at t = " + std::to_string(t));
        }
      }
    }
    out.push_back({t, y});
  }
  return out;
}

template <class State, class Rhs>
std::vector<Sample<State>> integrate(const Rhs& rhs, State y0, const IntegrationSpec& spec) {
  spec.validate();
  return spec.method == IntegrationMethod::RK4 ? integrate_rk4(rhs, std::move(y0), spec)
                                               : integrate_rk45(rhs, std::move(y0), spec);
}

}  // namespace sunlie::detail
