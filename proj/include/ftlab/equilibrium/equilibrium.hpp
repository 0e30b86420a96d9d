#pragma once

#include <optional>

#include "ftlab/equilibrium/potential.hpp"
#include "ftlab/numerics/polynomial.hpp"

namespace ftlab {

struct EquilibriumOptions {
  std::optional<SupportEndpoints> initial_guess;
  /// Allowed gap between the two routes to the Lagrange constant.
  double lagrange_tolerance = 1e-6;
};

/// Equilibrium measure of a one-cut regular potential, stored in the frame
/// where the support is [-a, 0]. Construction runs the regularity guards
/// (h > 0 on the support, Euler-Lagrange equality and strict inequality) and
/// the cross-check of the Lagrange constant.
class EquilibriumMeasure {
 public:
  static EquilibriumMeasure build(const Potential& v, const EquilibriumOptions& opts = {});

  const Potential& shifted_potential() const noexcept { return v_; }
  double a() const noexcept { return a_; }
  double shift() const noexcept { return shift_; }
  const Polynomial& h() const noexcept { return h_; }
  double ell() const noexcept { return ell_; }
  double c_v() const noexcept { return c_v_; }
  /// Second estimate of ell (Cauchy-transform route).
  double ell_check() const noexcept { return ell_check_; }

  /// (1/2pi) sqrt(|x|(x+a)) h(x) on [-a, 0]; DomainError elsewhere.
  double density(double x) const;
  /// mu((lo, hi)) for -a <= lo <= hi <= 0.
  double mass_between(double lo, double hi) const;
  double mass() const { return mass_between(-a_, 0.0); }

  /// int_0^z (1/2) sqrt(s(s+a)) h(s) ds for z >= 0.
  double phi_right(double z) const;
  /// ((3/2) phi(z))^{2/3}.
  double conformal_psi(double z) const;

  /// int log|x - y| dmu(y).
  double log_integral(double x) const;
  /// int log(1/|x-y|) dmu(y) + V(x)/2 + ell.
  double el_residual(double x) const;
  /// int dmu(y)/(y - s) for s > 0.
  double cauchy_right(double s) const;

  /// ell from the log potential at the midpoint of the support.
  double lagrange_by_log_potential() const;
  /// ell from -V(0)/2 + int_0^inf (C(s) + 1/(1+s)) ds.
  double lagrange_by_cauchy_transform() const;

 private:
  EquilibriumMeasure(Potential v, double a, double shift, Polynomial h)
      : v_(std::move(v)), a_(a), shift_(shift), h_(std::move(h)) {}

  Potential v_;
  double a_;
  double shift_;
  Polynomial h_;
  double ell_ = 0.0;
  double ell_check_ = 0.0;
  double c_v_ = 0.0;
};

}  // namespace ftlab
