#pragma once

namespace ftlab {

/// e^{-r}/(1+e^{-r})^2, the derivative of the logistic function. Even in r,
/// integrates to one over the line.
double fermi_weight(double r) noexcept;

/// log(1 + e^{-z}) without overflow for either sign of z.
double softplus_neg(double z) noexcept;

/// F_beta(y) = int_0^inf v^beta log(1 + e^{-y-v}) dv by composite
/// Gauss-Legendre. For beta < 0 the endpoint singularity is removed with
/// v = w^{1/(1+beta)}. Requires beta > -1 (DomainError) and y >= -50.
double f_beta_quad(double beta, double y);

/// Closed form through the polylogarithm,
///   F_0(y) = -Li_2(-e^{-y}),  F_k(y) = -k Gamma(k) Li_{2+k}(-e^{-y}),
/// summed as the alternating series in e^{-y} (accelerated near y = 0).
/// Requires y >= 0 and 0 <= k <= 6 (DomainError otherwise).
double f_k_closed(int k, double y);

/// -Li_s(-e^{-y}) = sum_{m>=1} (-1)^{m+1} e^{-my} / m^s for y >= 0.
double neg_polylog_neg_exp(double s, double y);

}  // namespace ftlab
