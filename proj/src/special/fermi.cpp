#include "ftlab/special/fermi.hpp"

#include <cmath>
#include <vector>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/quadrature.hpp"

namespace ftlab {

double fermi_weight(double r) noexcept {
  const double e = std::exp(-std::abs(r));
  return e / ((1.0 + e) * (1.0 + e));
}

double softplus_neg(double z) noexcept {
  // log(1 + e^{-z}) = max(-z, 0) + log1p(e^{-|z|})
  return std::max(-z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

double f_beta_quad(double beta, double y) {
  if (!(beta > -1.0)) throw DomainError("f_beta_quad: beta must exceed -1");
  if (!(y >= -50.0)) throw DomainError("f_beta_quad: y must be at least -50");

  const double peak = softplus_neg(y);
  double v_max = std::max(0.0, -y) + 42.0;
  const auto tail = [&](double v) { return std::pow(v, beta) * softplus_neg(y + v); };
  while (tail(v_max) > 1e-18 * peak) v_max += 2.0;

  constexpr int kPoints = 16;
  constexpr double kPanelWidth = 0.25;
  if (beta < 0.0) {
    // v = w^{1/(1+beta)} turns v^beta dv into dw / (1 + beta).
    const double p = 1.0 / (1.0 + beta);
    const double w_max = std::pow(v_max, 1.0 + beta);
    const int panels = std::max(8, static_cast<int>(std::ceil(w_max / kPanelWidth)));
    const auto scheme = PanelScheme::uniform(0.0, w_max, panels, kPoints);
    return integrate_panels([&](double w) { return softplus_neg(y + std::pow(w, p)); }, scheme) / (1.0 + beta);
  }

  std::vector<double> bp;
  const bool integer_beta = beta == std::floor(beta);
  double start = 0.0;
  if (!integer_beta) {
    // v^beta is not smooth at the origin; grade towards it.
    bp = graded_breakpoints(0.0, 0.5, 40);
    bp.pop_back();
    start = 0.5;
  }
  const int panels = static_cast<int>(std::ceil((v_max - start) / kPanelWidth));
  for (int i = 0; i <= panels; ++i) bp.push_back(start + (v_max - start) * i / panels);
  const PanelScheme scheme(std::move(bp), kPoints);
  return integrate_panels([&](double v) { return (beta == 0.0 ? 1.0 : std::pow(v, beta)) * softplus_neg(y + v); },
                          scheme);
}

double neg_polylog_neg_exp(double s, double y) {
  if (!(y >= 0.0)) throw DomainError("polylog series requires y >= 0");
  const auto term = [&](int m) { return std::exp(-m * y) / std::pow(static_cast<double>(m), s); };
  if (y >= 1.0) {
    double sum = 0.0;
    for (int m = 1;; ++m) {
      const double t = term(m);
      if (t < 1e-16 * 1e-2) break;
      sum += (m % 2 == 1) ? t : -t;
    }
    return sum;
  }
  // Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k, a_k = term(k+1),
  // valid because a_k is a completely monotone sequence.
  constexpr int n = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * term(k + 1);
    b = static_cast<double>(k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

double f_k_closed(int k, double y) {
  if (k < 0 || k > 6) throw DomainError("f_k_closed: k must lie in [0, 6]");
  if (!(y >= 0.0)) throw DomainError("f_k_closed: series route requires y >= 0");
  // -k Gamma(k) Li_{2+k}(-e^{-y}) = k! * sum (-1)^{m+1} e^{-my}/m^{k+2}
  return std::tgamma(k + 1.0) * neg_polylog_neg_exp(k + 2.0, y);
}

}  // namespace ftlab
