#include "ftlab/idpii/solver.hpp"

#include <algorithm>
#include <cmath>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/ode.hpp"
#include "ftlab/simd/kernels.hpp"
#include "ftlab/special/airy.hpp"
#include "ftlab/special/fermi.hpp"

namespace ftlab {

std::size_t IdPiiSolution::nearest_layer(double s) const {
  if (s > s_grid.front() + 1e-12 || s < s_grid.back() - 1e-12) throw DomainError("IdPiiSolution: S outside grid");
  const double pos = (s_grid.front() - s) / s_step();
  return std::min(static_cast<std::size_t>(std::lround(std::max(pos, 0.0))), layers() - 1);
}

std::vector<double> simpson_weights(std::size_t points, double h) {
  if (points < 2) throw DomainError("simpson_weights: need at least two points");
  std::vector<double> w(points, 0.0);
  const std::size_t intervals = points - 1;
  if (intervals == 1) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  for (std::size_t k = 0; k + 2 <= simpson_end; k += 2) {
    w[k] += h / 3.0;
    w[k + 1] += 4.0 * h / 3.0;
    w[k + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {
    const std::size_t k = simpson_end;
    w[k] += 3.0 * h / 8.0;
    w[k + 1] += 9.0 * h / 8.0;
    w[k + 2] += 9.0 * h / 8.0;
    w[k + 3] += 3.0 * h / 8.0;
  }
  return w;
}

IdPiiSolution solve_idpii(const IdPiiOptions& o) {
  const double t = o.temperature;
  if (!(t > 0.0) || !(o.h_xi > 0.0) || o.steps < 1 || !(o.s_max > o.s_min) || !(o.xi_hi > o.xi_lo))
    throw DomainError("solve_idpii: invalid parameters");
  if (o.enforce_ranges) {
    if (o.s_max < 8.0) throw DomainError("solve_idpii: S_max must be at least 8");
    if (t < 0.125 || t > 8.0) throw DomainError("solve_idpii: T must lie in [1/8, 8]");
    if (o.xi_lo > -25.0 || o.xi_hi < 12.0) throw DomainError("solve_idpii: xi grid must contain [-25, 12]");
    if (o.h_xi > 0.05) throw DomainError("solve_idpii: h_xi must not exceed 0.05");
  }

  IdPiiSolution sol;
  sol.temperature = t;
  sol.h_xi = o.h_xi;
  const auto nxi = static_cast<std::size_t>(std::llround((o.xi_hi - o.xi_lo) / o.h_xi)) + 1;
  sol.xi_grid.resize(nxi);
  for (std::size_t i = 0; i < nxi; ++i) sol.xi_grid[i] = o.xi_lo + o.h_xi * static_cast<double>(i);

  // Quadrature weights for I(S) with the Fermi weight folded in.
  std::vector<double> qw = simpson_weights(nxi, o.h_xi);
  for (std::size_t i = 0; i < nxi; ++i) qw[i] *= fermi_weight(sol.xi_grid[i]);

  // state = [Phi (nxi), Psi (nxi), P]
  std::vector<double> y0(2 * nxi + 1);
  const double t16 = std::pow(t, 1.0 / 6.0);
  const double t23 = std::pow(t, 2.0 / 3.0);
  const double tm13 = std::pow(t, -1.0 / 3.0);
  for (std::size_t i = 0; i < nxi; ++i) {
    const AiryPair a = airy_or_zero(t23 * sol.xi_grid[i] + o.s_max * tm13);
    y0[i] = t16 * a.ai;
    y0[nxi + i] = a.ai_prime / t16;
  }
  y0[2 * nxi] = o.s_max * o.s_max / (4.0 * t);

  const OdeRhs rhs = [&](double s, std::span<const double> y, std::span<double> dy) {
    const auto phi = y.subspan(0, nxi);
    const double integral = simd::weighted_sum_sq(qw, phi);
    const double shift = s / t + 2.0 * integral / t;
    std::copy(y.begin() + static_cast<std::ptrdiff_t>(nxi), y.begin() + static_cast<std::ptrdiff_t>(2 * nxi),
              dy.begin());
    simd::shifted_product(sol.xi_grid, shift, phi, dy.subspan(nxi, nxi));
    dy[2 * nxi] = s / (2.0 * t) + integral / t;
  };

  const auto steps = static_cast<std::size_t>(o.steps);
  sol.s_grid.reserve(steps + 1);
  sol.phi.reserve(steps + 1);
  sol.dphi.reserve(steps + 1);
  const double h_s = (o.s_max - o.s_min) / static_cast<double>(steps);
  const OdeObserver observe = [&](std::size_t step, double, std::span<const double> y) {
    // Grid times from the index so the stored S values carry no drift.
    sol.s_grid.push_back(step == steps ? o.s_min : o.s_max - h_s * static_cast<double>(step));
    sol.phi.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(nxi));
    sol.dphi.emplace_back(y.begin() + static_cast<std::ptrdiff_t>(nxi), y.begin() + static_cast<std::ptrdiff_t>(2 * nxi));
    sol.i_of_s.push_back(simd::weighted_sum_sq(qw, sol.phi.back()));
    sol.p_of_s.push_back(y[2 * nxi]);
  };
  ode_rk4_observe(rhs, std::move(y0), o.s_max, o.s_min, steps, observe);

  double global = 0.0;
  double boundary = 0.0;
  const double w_lo = fermi_weight(sol.xi_grid.front());
  const double w_hi = fermi_weight(sol.xi_grid.back());
  for (const auto& layer : sol.phi) {
    for (std::size_t i = 0; i < nxi; ++i) global = std::max(global, layer[i] * layer[i] * fermi_weight(sol.xi_grid[i]));
    boundary = std::max({boundary, layer.front() * layer.front() * w_lo, layer.back() * layer.back() * w_hi});
  }
  sol.boundary_ratio = global > 0.0 ? boundary / global : 0.0;
  sol.truncation_flagged = sol.boundary_ratio > 1e-10;
  return sol;
}

double idpii_ode_residual(const IdPiiSolution& sol, double env_floor) {
  const double t = sol.temperature;
  const double h = sol.s_step();
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < sol.layers(); ++j) {
    const double s = sol.s_grid[j];
    const double shift = s / t + 2.0 * sol.i_of_s[j] / t;
    for (std::size_t i = 0; i < sol.xi_grid.size(); ++i) {
      const double phi = sol.phi[j][i];
      const double coef = sol.xi_grid[i] + shift;
      const double env = std::sqrt(phi * phi + sol.dphi[j][i] * sol.dphi[j][i] / (std::abs(coef) + 1.0));
      if (env <= env_floor) continue;
      const double d2 = (sol.phi[j - 1][i] - 2.0 * phi + sol.phi[j + 1][i]) / (h * h);
      worst = std::max(worst, std::abs(d2 - coef * phi) / ((std::abs(coef) + 1.0) * env));
    }
  }
  return worst;
}

}  // namespace ftlab
