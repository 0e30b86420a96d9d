#pragma once

#include <optional>

#include "ftlab/numerics/polynomial.hpp"

namespace ftlab {

/// Polynomial external field V of even degree >= 2 with positive leading
/// coefficient. Construction throws DomainError otherwise.
class Potential {
 public:
  explicit Potential(Polynomial poly);

  double operator()(double x) const noexcept { return poly_(x); }
  const Polynomial& poly() const noexcept { return poly_; }
  /// V(x + c).
  Potential shifted(double c) const { return Potential(poly_.shifted(c)); }
  /// Location of the global minimum on the real line.
  double argmin() const;

 private:
  Polynomial poly_;
};

struct SupportEndpoints {
  double b_minus;
  double b_plus;
};

/// Endpoints of the one-cut support from the two moment conditions
///   (1/2pi) int V'(x) / sqrt((x-b-)(b+-x)) dx = 0,
///   (1/2pi) int x V'(x) / sqrt((x-b-)(b+-x)) dx = 1,
/// by damped Newton with Gauss-Chebyshev inner integrals. The default initial
/// guess centres a semicircle-scaled interval at argmin V.
/// Throws NoOneCutSolution on divergence or a collapsed interval.
SupportEndpoints solve_support(const Potential& v, std::optional<SupportEndpoints> guess = std::nullopt);

/// Residuals of the two moment conditions (diagnostic).
struct SupportResidual {
  double first;
  double second;
};
SupportResidual support_residual(const Potential& v, SupportEndpoints e);

struct ShiftedPotential {
  Potential potential;  // V(x + shift): support [-a, 0]
  double shift;         // b_plus of the input potential
  double a;             // support width
};

ShiftedPotential shift_to_zero(const Potential& v);

/// Polynomial part of V'(z) (z(z+a))^{-1/2} at infinity for a potential whose
/// support is [-a, 0]; degree deg V - 2.
Polynomial compute_h(const Potential& v_shifted, double a);

}  // namespace ftlab
