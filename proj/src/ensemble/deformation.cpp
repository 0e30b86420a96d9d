#include "ftlab/ensemble/deformation.hpp"

#include <cmath>

#include "ftlab/errors.hpp"
#include "ftlab/special/fermi.hpp"

namespace ftlab {

DeformationQ::DeformationQ(Polynomial poly, double window_lo, double window_hi)
    : poly_(std::move(poly)), t_(-poly_.derivative()(0.0)), lo_(window_lo), hi_(window_hi) {
  if (!(window_lo < 0.0 && window_hi > 0.0)) throw DomainError("DeformationQ: window must straddle the origin");
  if (poly_.coefficient(0) != 0.0) throw DomainError("DeformationQ: Q(0) must vanish");
  if (!(t_ > 0.0)) throw DomainError("DeformationQ: t = -Q'(0) must be positive");
  for (int i = 0; i <= 200; ++i) {
    const double x = lo_ + (hi_ - lo_) * i / 200.0;
    if (x == 0.0) continue;
    const double qx = poly_(x);
    if ((x < 0.0 && !(qx > 0.0)) || (x > 0.0 && !(qx < 0.0)))
      throw DomainError("DeformationQ: Q must change sign only at the origin");
  }
}

DeformationQ DeformationQ::linear(double t) { return DeformationQ(Polynomial({0.0, -t})); }

double log_sigma_scaled(const DeformationQ& q, double n23, double s, double x) noexcept {
  return -softplus_neg(s + n23 * q(x));
}

double log_sigma(const DeformationQ& q, int n, double s, double x) noexcept {
  return log_sigma_scaled(q, std::pow(static_cast<double>(n), 2.0 / 3.0), s, x);
}

}  // namespace ftlab
