#pragma once

#include "ftlab/ensemble/deformation.hpp"
#include "ftlab/equilibrium/equilibrium.hpp"

namespace ftlab {

/// q0 = -(1/2pi) int_{-a}^0 log sigma_n(x) / sqrt(|x|(x+a)) dx, computed in
/// the Chebyshev angle where the endpoint singularities disappear.
double szego_q0(const EquilibriumMeasure& eq, const DeformationQ& q, int n, double s);

/// Large-n limit of n^{1/3} q0: t^{-1/2} F_{-1/2}(s) / (2 pi sqrt(a)).
double q0_limit(double s, double t, double a);

}  // namespace ftlab
