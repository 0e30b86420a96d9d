#include "ftlab/idpii/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ftlab/errors.hpp"

namespace ftlab {

namespace {

struct LagrangeStencil {
  std::size_t first;
  std::array<double, 6> w;   // values
  std::array<double, 6> dw;  // d/dxi
};

LagrangeStencil lagrange6(const IdPiiSolution& sol, double xi) {
  const auto& g = sol.xi_grid;
  const double h = sol.h_xi;
  if (xi < g.front() - 1e-12 || xi > g.back() + 1e-12) throw DomainError("interp_phi: xi outside grid");
  const auto cell = static_cast<long>(std::floor((xi - g.front()) / h));
  const long first = std::clamp(cell - 2, 0L, static_cast<long>(g.size()) - 6);
  LagrangeStencil st{static_cast<std::size_t>(first), {}, {}};
  std::array<double, 6> r{};
  for (int k = 0; k < 6; ++k) {
    double rk = (xi - g[st.first + static_cast<std::size_t>(k)]) / h;
    // Snap on-grid points so stored values are reproduced exactly.
    if (std::abs(rk - std::round(rk)) < 1e-9) rk = std::round(rk);
    r[static_cast<std::size_t>(k)] = rk;
  }
  for (int k = 0; k < 6; ++k) {
    double num = 1.0;
    double den = 1.0;
    double dsum = 0.0;
    for (int j = 0; j < 6; ++j) {
      if (j == k) continue;
      num *= r[static_cast<std::size_t>(j)];
      den *= static_cast<double>(k - j);
    }
    // derivative of prod_j r_j: sum_i prod_{j != i} r_j
    for (int i = 0; i < 6; ++i) {
      if (i == k) continue;
      double p = 1.0;
      for (int j = 0; j < 6; ++j)
        if (j != k && j != i) p *= r[static_cast<std::size_t>(j)];
      dsum += p;
    }
    st.w[static_cast<std::size_t>(k)] = num / den;
    st.dw[static_cast<std::size_t>(k)] = dsum / (den * h);
  }
  return st;
}

double apply(const std::array<double, 6>& w, const std::vector<double>& v, std::size_t first) {
  double acc = 0.0;
  for (std::size_t k = 0; k < 6; ++k) acc += w[k] * v[first + k];
  return acc;
}

}  // namespace

double interp_i(const IdPiiSolution& sol, double s) {
  const std::size_t j = std::min(sol.nearest_layer(s), sol.layers() - 2);
  const std::size_t jj = sol.s_grid[j] >= s ? j : j - 1;
  const double frac = (sol.s_grid[jj] - s) / sol.s_step();
  return (1.0 - frac) * sol.i_of_s[jj] + frac * sol.i_of_s[jj + 1];
}

PhiSample interp_phi(const IdPiiSolution& sol, double xi, double s) {
  if (s > sol.s_grid.front() + 1e-12 || s < sol.s_grid.back() - 1e-12) throw DomainError("interp_phi: S outside grid");
  const LagrangeStencil st = lagrange6(sol, xi);
  const double h = sol.s_step();
  auto j = static_cast<std::size_t>(std::floor((sol.s_grid.front() - s) / h));
  j = std::min(j, sol.layers() - 2);
  // Layers j (upper, S_a) and j+1 (lower, S_b); tau in [0, 1] from S_b upward.
  const double s_a = sol.s_grid[j];
  const double s_b = sol.s_grid[j + 1];
  double tau = (s - s_b) / (s_a - s_b);
  if (tau < 1e-9) tau = 0.0;
  if (tau > 1.0 - 1e-9) tau = 1.0;
  const double len = s_a - s_b;
  const double h00 = (1.0 + 2.0 * tau) * (1.0 - tau) * (1.0 - tau);
  const double h10 = tau * (1.0 - tau) * (1.0 - tau);
  const double h01 = tau * tau * (3.0 - 2.0 * tau);
  const double h11 = tau * tau * (tau - 1.0);
  const double t = sol.temperature;

  const auto layer = [&](std::size_t jj, const std::array<double, 6>& w) {
    const double phi = apply(w, sol.phi[jj], st.first);
    const double dphi = apply(w, sol.dphi[jj], st.first);
    return std::array<double, 2>{phi, dphi};
  };
  const auto rhs = [&](std::size_t jj, double phi, double phi_xi, bool derivative) {
    const double shift = sol.s_grid[jj] / t + 2.0 * sol.i_of_s[jj] / t;
    return derivative ? phi + (xi + shift) * phi_xi : (xi + shift) * phi;
  };

  const auto va = layer(j, st.w);
  const auto vb = layer(j + 1, st.w);
  const auto da = layer(j, st.dw);
  const auto db = layer(j + 1, st.dw);

  PhiSample out{};
  out.phi = h00 * vb[0] + h10 * len * vb[1] + h01 * va[0] + h11 * len * va[1];
  out.phi_xi = h00 * db[0] + h10 * len * db[1] + h01 * da[0] + h11 * len * da[1];
  out.dphi = h00 * vb[1] + h10 * len * rhs(j + 1, vb[0], 0.0, false) + h01 * va[1] + h11 * len * rhs(j, va[0], 0.0, false);
  out.dphi_xi = h00 * db[1] + h10 * len * rhs(j + 1, vb[0], db[0], true) + h01 * da[1] +
                h11 * len * rhs(j, va[0], da[0], true);
  return out;
}

double k_infinity(const IdPiiSolution& sol, double u, double v, double s, double t_param) {
  if (!(t_param > 0.0)) throw DomainError("k_infinity: t must be positive");
  const double temperature = std::pow(t_param, -1.5);
  if (std::abs(temperature - sol.temperature) > 1e-12 * temperature)
    throw DomainError("k_infinity: solution temperature does not match t^{-3/2}");
  const double big_s = s * temperature;
  const PhiSample a = interp_phi(sol, -s + t_param * u, big_s);
  if (std::abs(u - v) < 1e-6) return t_param * (a.phi_xi * a.dphi - a.phi * a.dphi_xi);
  const PhiSample b = interp_phi(sol, -s + t_param * v, big_s);
  return (a.phi * b.dphi - b.phi * a.dphi) / (u - v);
}

}  // namespace ftlab
