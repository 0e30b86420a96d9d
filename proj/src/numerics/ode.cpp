#include "ftlab/numerics/ode.hpp"

#include <cmath>
#include <string>

#include "ftlab/errors.hpp"
#include "ftlab/simd/kernels.hpp"

namespace ftlab {

std::vector<double> ode_rk4_observe(const OdeRhs& rhs, std::vector<double> y, double s_start, double s_end,
                                    std::size_t n_steps, const OdeObserver& observer) {
  if (n_steps < 1) throw DomainError("ode_rk4: n_steps must be at least 1");
  const std::size_t dim = y.size();
  const double h = (s_end - s_start) / static_cast<double>(n_steps);
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  if (observer) observer(0, s_start, y);
  const auto& kt = simd::active();
  for (std::size_t step = 1; step <= n_steps; ++step) {
    const double s = s_start + h * static_cast<double>(step - 1);
    rhs(s, y, k1);
    kt.axpy_to(y.data(), 0.5 * h, k1.data(), tmp.data(), dim);
    rhs(s + 0.5 * h, tmp, k2);
    kt.axpy_to(y.data(), 0.5 * h, k2.data(), tmp.data(), dim);
    rhs(s + 0.5 * h, tmp, k3);
    kt.axpy_to(y.data(), h, k3.data(), tmp.data(), dim);
    rhs(s + h, tmp, k4);
    for (std::size_t i = 0; i < dim; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    for (double v : y) {
      if (!std::isfinite(v))
        throw BlowUpError("ode_rk4: non-finite state at step " + std::to_string(step), step, s);
    }
    const double s_next = step == n_steps ? s_end : s_start + h * static_cast<double>(step);
    if (observer) observer(step, s_next, y);
  }
  return y;
}

Trajectory ode_rk4(const OdeRhs& rhs, std::vector<double> state0, double s_start, double s_end,
                   std::size_t n_steps) {
  Trajectory traj;
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);
  ode_rk4_observe(rhs, std::move(state0), s_start, s_end, n_steps,
                  [&](std::size_t, double s, std::span<const double> y) {
                    traj.times.push_back(s);
                    traj.states.emplace_back(y.begin(), y.end());
                  });
  return traj;
}

}  // namespace ftlab
