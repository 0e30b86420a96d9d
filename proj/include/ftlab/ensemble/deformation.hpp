#pragma once

#include "ftlab/numerics/polynomial.hpp"

namespace ftlab {

/// Deformation Q with Q(0) = 0, t = -Q'(0) > 0, Q > 0 left of the origin and
/// Q < 0 right of it on the validation window (sampled at 201 points).
/// Construction throws DomainError when any of these fails.
class DeformationQ {
 public:
  explicit DeformationQ(Polynomial poly, double window_lo = -6.0, double window_hi = 6.0);

  /// -t x.
  static DeformationQ linear(double t);

  double operator()(double x) const noexcept { return poly_(x); }
  const Polynomial& poly() const noexcept { return poly_; }
  double t() const noexcept { return t_; }
  double window_lo() const noexcept { return lo_; }
  double window_hi() const noexcept { return hi_; }

 private:
  Polynomial poly_;
  double t_;
  double lo_;
  double hi_;
};

/// log sigma_n(x) = -log(1 + e^{-z}), z = s + n^{2/3} Q(x).
double log_sigma(const DeformationQ& q, int n, double s, double x) noexcept;

/// Same with the scale n^{2/3} precomputed.
double log_sigma_scaled(const DeformationQ& q, double n23, double s, double x) noexcept;

}  // namespace ftlab
