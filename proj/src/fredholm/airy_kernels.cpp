#include "ftlab/fredholm/airy_kernels.hpp"

#include <algorithm>
#include <cmath>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/quadrature.hpp"
#include "ftlab/special/airy.hpp"

namespace ftlab {

double airy_kernel(double u, double v) {
  const AiryPair a = airy_or_zero(u);
  if (std::abs(u - v) < 1e-9) return a.ai_prime * a.ai_prime - u * a.ai * a.ai;
  const AiryPair b = airy_or_zero(v);
  return (a.ai * b.ai_prime - a.ai_prime * b.ai) / (u - v);
}

double fermi_factor(double zeta, double t_cbrt) noexcept {
  const double z = t_cbrt * zeta;
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

ZetaWindow zeta_window(double temperature, double min_arg) {
  if (!(temperature > 0.0)) throw DomainError("zeta_window: T must be positive");
  const double tc = std::cbrt(temperature);
  // (4/3) x^{3/2} >= 45 once x >= 33.75^{2/3}
  const double airy_cut = std::pow(33.75, 2.0 / 3.0);
  return {-45.0 / tc - 5.0, std::min(60.0, airy_cut - min_arg), std::min(0.5, 1.5 / tc)};
}

PanelScheme zeta_scheme(const ZetaWindow& win, double temperature) {
  if (!(win.hi > win.lo)) throw DomainError("zeta_scheme: empty window");
  const double tc = std::cbrt(temperature);
  const double f_lo = std::max(win.lo, -20.0 / tc);
  const double f_hi = std::min(win.hi, 20.0 / tc);
  std::vector<double> bp;
  const auto append = [&](double a, double b, double width) {
    if (!(b > a)) return;
    const int k = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    for (int i = bp.empty() ? 0 : 1; i <= k; ++i) bp.push_back(i == k ? b : a + (b - a) * i / k);
  };
  append(win.lo, f_lo, 0.5);
  if (f_lo < 0.0 && f_hi > 0.0) {
    append(f_lo, 0.0, win.fine_width);
    append(0.0, f_hi, win.fine_width);
  } else {
    append(f_lo, f_hi, win.fine_width);
  }
  append(f_hi, win.hi, 0.5);
  return PanelScheme(std::move(bp), 16);
}

double ft_airy_kernel(double u, double v, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("ft_airy_kernel: T must be positive");
  if (u < -30.0 || v < -30.0) throw DomainError("ft_airy_kernel: arguments must be at least -30");
  const double tc = std::cbrt(temperature);
  const ZetaWindow win = zeta_window(temperature, std::min(u, v));
  if (win.hi <= win.lo) return 0.0;
  return integrate_panels(
      [&](double z) { return fermi_factor(z, tc) * airy_or_zero(u + z).ai * airy_or_zero(v + z).ai; },
      zeta_scheme(win, temperature));
}

}  // namespace ftlab
