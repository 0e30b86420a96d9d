#pragma once

#include "ftlab/numerics/quadrature.hpp"

namespace ftlab {

/// (Ai(u)Ai'(v) - Ai'(u)Ai(v))/(u - v), with Ai'(u)^2 - u Ai(u)^2 on the
/// diagonal (used when |u - v| < 1e-9).
double airy_kernel(double u, double v);

/// Fermi factor 1/(1 + e^{-T^{1/3} zeta}) evaluated without overflow.
double fermi_factor(double zeta, double t_cbrt) noexcept;

/// Integration window for the finite-temperature kernel at temperature T
/// when the smallest Airy shift is min_arg.
struct ZetaWindow {
  double lo;
  double hi;
  double fine_width;  // panel width where the Fermi factor varies
};
ZetaWindow zeta_window(double temperature, double min_arg);

/// Panels over the window: fine_width on |zeta| <= 20/T^{1/3} with a
/// breakpoint at 0, width at most 0.5 elsewhere (Airy oscillation for
/// arguments down to -100).
PanelScheme zeta_scheme(const ZetaWindow& win, double temperature);

/// int 1/(1 + e^{-T^{1/3} zeta}) Ai(u + zeta) Ai(v + zeta) d zeta on the
/// window above by composite Gauss-Legendre. Requires T > 0 and u, v >= -30.
double ft_airy_kernel(double u, double v, double temperature);

}  // namespace ftlab
