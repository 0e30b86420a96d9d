#pragma once

#include <array>

#include "ftlab/idpii/solver.hpp"

namespace ftlab {

/// log L^Ai(-(S + k h) T^{-1/3}, T^{-2}) for k = -2..2 (Nystrom with m nodes).
std::array<double, 5> tw_fredholm_stencil(double s, double temperature, int m, double spacing = 0.05,
                                          double scale = 10.0);

/// Fourth-order central second difference of a 5-point stencil.
double second_difference(const std::array<double, 5>& f, double spacing);

/// |D^2 log L - (-(1/T)(I(S) - S/2))| for the stencil values.
double tw_local_check(const IdPiiSolution& sol, double s, const std::array<double, 5>& log_l, double spacing = 0.05);

/// |D^2 log L - (-(1/T) I(S))|: the same comparison without the S/2 term.
double tw_local_check_unshifted(const IdPiiSolution& sol, double s, const std::array<double, 5>& log_l,
                                double spacing = 0.05);

/// -(1/T) int_S^{S_cut} (v - S)(I(v) - v/2) dv by the trapezoid rule on the
/// stored layers, or without the v/2 term when subtract_half is false.
/// Requires S_min <= S <= S_cut <= S_max.
double tw_windowed_integral(const IdPiiSolution& sol, double s, double s_cut, bool subtract_half = true);

}  // namespace ftlab
