#pragma once

#include <vector>

namespace ftlab {

struct IdPiiOptions {
  double temperature = 1.0;
  double s_min = -2.0;
  double s_max = 12.0;
  double xi_lo = -30.0;
  double xi_hi = 15.0;
  double h_xi = 0.04;
  int steps = 2800;
  /// Validate the documented input ranges (S_max >= 8, T in [1/8, 8], grid
  /// containing [-25, 12], h_xi <= 0.05). Off for exploratory runs.
  bool enforce_ranges = true;
};

/// Solution of
///   d_S Phi = Psi,  d_S Psi = (xi + S/T + (2/T) I(S)) Phi,
///   d_S P = S/(2T) + I(S)/T,  I(S) = int Phi(r|S)^2 w(r) dr,
/// marched downward from Airy data at S_max with P(S_max) = S_max^2/(4T).
/// Layers are stored for every RK4 step; s_grid is descending.
struct IdPiiSolution {
  double temperature = 1.0;
  std::vector<double> s_grid;
  std::vector<double> xi_grid;
  double h_xi = 0.0;
  std::vector<std::vector<double>> phi;   // phi[j][i] = Phi(xi_i | S_j)
  std::vector<std::vector<double>> dphi;  // d_S Phi
  std::vector<double> i_of_s;
  std::vector<double> p_of_s;
  /// Largest |Phi^2 w| at either xi boundary over the global max of Phi^2 w.
  double boundary_ratio = 0.0;
  bool truncation_flagged = false;

  std::size_t layers() const noexcept { return s_grid.size(); }
  double s_step() const noexcept { return s_grid[0] - s_grid[1]; }
  /// Index j with s_grid[j] closest to S.
  std::size_t nearest_layer(double s) const;
};

/// Composite Simpson weights on a uniform grid (3/8 rule on the last three
/// intervals when the interval count is odd).
std::vector<double> simpson_weights(std::size_t points, double h);

/// Throws DomainError on invalid ranges and BlowUpError on a non-finite state.
IdPiiSolution solve_idpii(const IdPiiOptions& opts = {});

/// Largest |d^2Phi/dS^2 - (xi + S/T + 2I/T) Phi| / ((|coef| + 1) env) over
/// interior layers and points whose local envelope
/// env = sqrt(Phi^2 + Psi^2/(|coef| + 1)) exceeds env_floor; second
/// differences use the stored S-layers.
double idpii_ode_residual(const IdPiiSolution& sol, double env_floor = 1e-6);

}  // namespace ftlab
