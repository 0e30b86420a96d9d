#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ftlab {

/// dy/ds = rhs(s, y), written into dy (same length as y).
using OdeRhs = std::function<void(double s, std::span<const double> y, std::span<double> dy)>;

/// Called after every accepted step (and once for the initial state, step 0).
using OdeObserver = std::function<void(std::size_t step, double s, std::span<const double> y)>;

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

/// Classical fixed-step RK4 from s_start to s_end (either direction) in
/// n_steps steps, reporting each state to the observer. Returns the final
/// state. Throws BlowUpError with the step index on a non-finite state.
std::vector<double> ode_rk4_observe(const OdeRhs& rhs, std::vector<double> state0, double s_start, double s_end,
                                    std::size_t n_steps, const OdeObserver& observer);

/// Same integrator, returning the states at all n_steps + 1 grid times.
Trajectory ode_rk4(const OdeRhs& rhs, std::vector<double> state0, double s_start, double s_end,
                   std::size_t n_steps);

}  // namespace ftlab
