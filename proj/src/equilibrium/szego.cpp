#include "ftlab/equilibrium/szego.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/quadrature.hpp"
#include "ftlab/special/fermi.hpp"

namespace ftlab {

double szego_q0(const EquilibriumMeasure& eq, const DeformationQ& q, int n, double s) {
  if (n < 1) throw DomainError("szego_q0: n must be positive");
  constexpr double kPi = std::numbers::pi;
  const double r = 0.5 * eq.a();
  const double n23 = std::pow(static_cast<double>(n), 2.0 / 3.0);
  // sigma_n varies on the scale theta ~ n^{-1/3} next to theta = 0 (x = 0).
  std::vector<double> bp = graded_breakpoints(0.0, kPi, 30);
  for (int i = 1; i < 200; ++i) bp.push_back(kPi * i / 200.0);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end(), [](double x, double y) { return y - x < 1e-15; }), bp.end());
  const PanelScheme scheme(std::move(bp), 16);
  const double integral = integrate_panels(
      [&](double theta) { return log_sigma_scaled(q, n23, s, -r + r * std::cos(theta)); }, scheme);
  return -integral / (2.0 * kPi);
}

double q0_limit(double s, double t, double a) {
  if (!(t > 0.0) || !(a > 0.0)) throw DomainError("q0_limit: t and a must be positive");
  return f_beta_quad(-0.5, s) / (2.0 * std::numbers::pi * std::sqrt(t * a));
}

}  // namespace ftlab
