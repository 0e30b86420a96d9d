#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "ftlab/numerics/linalg.hpp"

namespace ftlab {

/// Nystrom discretization of the Airy-type kernel on L^2(-s, inf) with nodes
/// from the map x = -s + L u/(1-u) applied to Gauss-Legendre on [0, 1).
/// T = +inf selects the classical Airy kernel.
struct NystromOperator {
  double s = 0.0;
  double temperature = 0.0;
  double scale = 10.0;
  std::vector<double> nodes;
  std::vector<double> sqrt_weights;
  SquareMatrix kernel_matrix;  // sqrt(w_i) K(x_i, x_j) sqrt(w_j)
  double spectrum_lo = 0.0;
  double spectrum_hi = 0.0;
};

inline constexpr double kClassicalAiry = std::numeric_limits<double>::infinity();

/// Requires m >= 8 and L > 0 (DomainError).
NystromOperator build_nystrom(double s, double temperature, int m, double scale = 10.0);

/// log det(I - K). Throws InconsistencyError when the kernel spectrum leaves
/// (-1e-6, 1 + 1e-6) or the determinant is not positive.
double fredholm_logdet(const NystromOperator& op);

/// det(I - K_T) on L^2(-s, inf), value in (0, 1].
double fredholm_det_ft(double s, double temperature, int m, double scale = 10.0);
/// det(I - K_Ai) on L^2(-s, inf).
double fredholm_det_airy(double s, int m, double scale = 10.0);

}  // namespace ftlab
