#pragma once

#include "ftlab/equilibrium/potential.hpp"
#include "ftlab/numerics/quadrature.hpp"

namespace ftlab {

struct GridOptions {
  double energy_cut = 400.0;  // keep n(V - min V) below this
  double widen = 0.10;
  int tail_panels = 20;
  int points_per_panel = 16;
};

/// Composite rule for inner products against e^{-nV} with support [-a, 0]:
/// ceil(3n)+20 equal panels on [-a-0.5, 0.5] and geometric tail panels out
/// to the window where n(V - min V) reaches the energy cut (widened).
/// Throws DegenerateInput when the window is empty.
PanelScheme build_grid(const Potential& v_shifted, double a, int n, const GridOptions& opts = {});

/// Breakpoints lo = b_0 < ... < b_count = hi whose widths grow geometrically
/// from first_width (uniform when that already covers the interval).
std::vector<double> geometric_breakpoints(double lo, double hi, int count, double first_width);

}  // namespace ftlab
