#include "ftlab/equilibrium/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/quadrature.hpp"

namespace ftlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPoints = 16;

// Sorted union of breakpoint sets with near-duplicates dropped.
std::vector<double> merge_breakpoints(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<double> out;
  const double span = a.back() - a.front();
  for (double x : a)
    if (out.empty() || x - out.back() > 1e-13 * span) out.push_back(x);
  if (out.back() < a.back()) out.back() = a.back();
  return out;
}

std::vector<double> uniform_breakpoints(double lo, double hi, int panels) {
  std::vector<double> bp(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) bp[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / panels;
  bp.back() = hi;
  return bp;
}

// Breakpoints on [0, pi] graded geometrically towards theta0 from both sides.
std::vector<double> theta_breakpoints(double theta0) {
  constexpr int kLevels = 40;
  std::vector<double> bp = uniform_breakpoints(0.0, kPi, 16);
  if (theta0 < kPi) bp = merge_breakpoints(bp, graded_breakpoints(theta0, kPi, kLevels));
  if (theta0 > 0.0) {
    std::vector<double> left = graded_breakpoints(0.0, theta0, kLevels);
    for (double& x : left) x = theta0 - x;
    bp = merge_breakpoints(bp, left);
  }
  return bp;
}

}  // namespace

EquilibriumMeasure EquilibriumMeasure::build(const Potential& v, const EquilibriumOptions& opts) {
  const SupportEndpoints e = solve_support(v, opts.initial_guess);
  const double a = e.b_plus - e.b_minus;
  if (!(a > 0.0)) throw NoOneCutSolution("equilibrium: collapsed support");
  Potential vs = v.shifted(e.b_plus);
  Polynomial h = compute_h(vs, a);
  for (int i = 0; i <= 100; ++i) {
    const double x = -a + a * i / 100.0;
    if (!(h(x) > 0.0)) throw NoOneCutSolution("equilibrium: h is not positive on the support");
  }

  EquilibriumMeasure eq(std::move(vs), a, e.b_plus, std::move(h));
  eq.c_v_ = std::pow(2.0, -2.0 / 3.0) * std::pow(eq.h_(0.0), 2.0 / 3.0) * std::cbrt(a);

  const double mass = eq.mass();
  if (!(std::abs(mass - 1.0) <= 1e-10))
    throw InconsistencyError("equilibrium: density mass " + std::to_string(mass) + " differs from 1");

  eq.ell_ = eq.lagrange_by_log_potential();
  eq.ell_check_ = eq.lagrange_by_cauchy_transform();
  if (!(std::abs(eq.ell_ - eq.ell_check_) <= opts.lagrange_tolerance))
    throw InconsistencyError("equilibrium: the two Lagrange-constant routes disagree");

  for (int k = 1; k <= 5; ++k) {
    const double x = -a + a * k / 6.0;
    if (!(std::abs(eq.el_residual(x)) <= 1e-8))
      throw NoOneCutSolution("equilibrium: Euler-Lagrange equality fails on the support");
  }
  for (double x : {0.5, 1.0, -a - 0.5, -a - 1.0})
    if (!(eq.el_residual(x) > 0.0))
      throw NoOneCutSolution("equilibrium: Euler-Lagrange inequality fails off the support");
  return eq;
}

double EquilibriumMeasure::density(double x) const {
  const double tol = 1e-14 * a_;
  if (x < -a_ - tol || x > tol) throw DomainError("density: x outside the support");
  x = std::clamp(x, -a_, 0.0);
  return std::sqrt(-x * (x + a_)) * h_(x) / (2.0 * kPi);
}

double EquilibriumMeasure::mass_between(double lo, double hi) const {
  if (!(lo <= hi) || lo < -a_ || hi > 0.0) throw DomainError("mass_between: need -a <= lo <= hi <= 0");
  const double r = 0.5 * a_;
  const auto theta = [&](double x) { return std::acos(std::clamp((x + r) / r, -1.0, 1.0)); };
  const double t0 = theta(hi);
  const double t1 = theta(lo);
  if (t1 <= t0) return 0.0;
  const auto scheme = PanelScheme::uniform(t0, t1, 16, kPoints);
  return integrate_panels(
      [&](double t) {
        const double sn = std::sin(t);
        return r * r * sn * sn * h_(-r + r * std::cos(t));
      },
      scheme) /
         (2.0 * kPi);
}

double EquilibriumMeasure::phi_right(double z) const {
  if (!(z >= 0.0)) throw DomainError("phi_right: z must be nonnegative");
  if (z == 0.0) return 0.0;
  // s = z w^2 removes the square-root behaviour at s = 0.
  const auto scheme = PanelScheme::uniform(0.0, 1.0, 8, kPoints);
  const double integral = integrate_panels(
      [&](double w) {
        const double s = z * w * w;
        return w * w * std::sqrt(s + a_) * h_(s);
      },
      scheme);
  return z * std::sqrt(z) * integral;
}

double EquilibriumMeasure::conformal_psi(double z) const { return std::pow(1.5 * phi_right(z), 2.0 / 3.0); }

double EquilibriumMeasure::log_integral(double x) const {
  const double r = 0.5 * a_;
  const double theta0 = std::acos(std::clamp((x + r) / r, -1.0, 1.0));
  const PanelScheme scheme(theta_breakpoints(theta0), kPoints);
  return integrate_panels(
             [&](double t) {
               const double sn = std::sin(t);
               const double y = -r + r * std::cos(t);
               return std::log(std::abs(x - y)) * r * r * sn * sn * h_(y);
             },
             scheme) /
         (2.0 * kPi);
}

double EquilibriumMeasure::el_residual(double x) const { return -log_integral(x) + 0.5 * v_(x) + ell_; }

double EquilibriumMeasure::cauchy_right(double s) const {
  if (!(s > 0.0)) throw DomainError("cauchy_right: s must be positive");
  if (s <= 1.0) return 0.5 * std::sqrt(s * (s + a_)) * h_(s) - 0.5 * v_.poly().derivative()(s);
  const double r = 0.5 * a_;
  const auto scheme = PanelScheme::uniform(0.0, kPi, 16, kPoints);
  return integrate_panels(
             [&](double t) {
               const double sn = std::sin(t);
               const double y = -r + r * std::cos(t);
               return r * r * sn * sn * h_(y) / (y - s);
             },
             scheme) /
         (2.0 * kPi);
}

double EquilibriumMeasure::lagrange_by_log_potential() const {
  const double x0 = -0.5 * a_;
  return log_integral(x0) - 0.5 * v_(x0);
}

double EquilibriumMeasure::lagrange_by_cauchy_transform() const {
  const Polynomial dv = v_.poly().derivative();
  // (0, 1]: closed form, s = w^2.
  const double near = integrate_panels(
      [&](double w) {
        const double s = w * w;
        const double c = 0.5 * std::sqrt(s * (s + a_)) * h_(s) - 0.5 * dv(s);
        return 2.0 * w * (c + 1.0 / (1.0 + s));
      },
      PanelScheme::uniform(0.0, 1.0, 8, kPoints));
  // (1, inf): s = 1 + u/(1-u).
  const double far = integrate_panels(
      [&](double u) {
        const double s = 1.0 + u / (1.0 - u);
        const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        return (cauchy_right(s) + 1.0 / (1.0 + s)) * jac;
      },
      PanelScheme::uniform(0.0, 1.0, 16, kPoints));
  return -0.5 * v_(0.0) + near + far;
}

}  // namespace ftlab
