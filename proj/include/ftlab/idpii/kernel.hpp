#pragma once

#include "ftlab/idpii/solver.hpp"

namespace ftlab {

/// Phi, d_S Phi and their xi-derivatives at an off-grid point.
struct PhiSample {
  double phi;
  double dphi;
  double phi_xi;
  double dphi_xi;
};

/// Six-point Lagrange interpolation in xi on the two S-layers around S, then
/// cubic Hermite in S using d_S Phi (for Phi) and the equation's right-hand
/// side (for d_S Phi). Throws DomainError outside the grids.
PhiSample interp_phi(const IdPiiSolution& sol, double xi, double s);

/// I(S) by linear interpolation between stored layers.
double interp_i(const IdPiiSolution& sol, double s);

/// K_inf(u, v) = (f1(u) f2(v) - f1(v) f2(u)) / (u - v) with
/// f1 = Phi(-s + t' zeta | S, T), f2 = d_S Phi, T = t'^{-3/2}, S = s t'^{-3/2};
/// zeta-derivatives on the diagonal (|u - v| < 1e-6). The solution must have
/// been built at T = t'^{-3/2} (DomainError otherwise).
double k_infinity(const IdPiiSolution& sol, double u, double v, double s, double t_param);

}  // namespace ftlab
