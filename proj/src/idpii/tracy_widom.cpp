#include "ftlab/idpii/tracy_widom.hpp"

#include <cmath>

#include "ftlab/errors.hpp"
#include "ftlab/fredholm/nystrom.hpp"
#include "ftlab/idpii/kernel.hpp"

namespace ftlab {

std::array<double, 5> tw_fredholm_stencil(double s, double temperature, int m, double spacing, double scale) {
  std::array<double, 5> out{};
  const double tm13 = std::pow(temperature, -1.0 / 3.0);
  const double t_kpz = 1.0 / (temperature * temperature);
  for (int k = -2; k <= 2; ++k)
    out[static_cast<std::size_t>(k + 2)] = fredholm_logdet(build_nystrom(-(s + k * spacing) * tm13, t_kpz, m, scale));
  return out;
}

double second_difference(const std::array<double, 5>& f, double h) {
  return (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
}

double tw_local_check(const IdPiiSolution& sol, double s, const std::array<double, 5>& log_l, double spacing) {
  const double target = -(interp_i(sol, s) - 0.5 * s) / sol.temperature;
  return std::abs(second_difference(log_l, spacing) - target);
}

double tw_local_check_unshifted(const IdPiiSolution& sol, double s, const std::array<double, 5>& log_l,
                                double spacing) {
  const double target = -interp_i(sol, s) / sol.temperature;
  return std::abs(second_difference(log_l, spacing) - target);
}

double tw_windowed_integral(const IdPiiSolution& sol, double s, double s_cut, bool subtract_half) {
  if (!(s <= s_cut) || s < sol.s_grid.back() - 1e-12 || s_cut > sol.s_grid.front() + 1e-12)
    throw DomainError("tw_windowed_integral: need S_min <= S <= S_cut <= S_max");
  if (s == s_cut) return 0.0;
  const double half = subtract_half ? 0.5 : 0.0;
  const auto f = [&](double v, double i) { return (v - s) * (i - half * v); };
  // Stored layers strictly inside (s, s_cut) plus interpolated end values.
  double acc = 0.0;
  double prev_v = s_cut;
  double prev_f = f(s_cut, interp_i(sol, s_cut));
  for (std::size_t j = 0; j < sol.layers(); ++j) {
    const double v = sol.s_grid[j];
    if (v >= s_cut || v <= s) continue;
    const double fv = f(v, sol.i_of_s[j]);
    acc += 0.5 * (prev_v - v) * (prev_f + fv);
    prev_v = v;
    prev_f = fv;
  }
  acc += 0.5 * (prev_v - s) * (prev_f + f(s, interp_i(sol, s)));
  return -acc / sol.temperature;
}

}  // namespace ftlab
