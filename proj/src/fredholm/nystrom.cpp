#include "ftlab/fredholm/nystrom.hpp"

#include <algorithm>

#include "ftlab/errors.hpp"
#include "ftlab/fredholm/airy_kernels.hpp"
#include "ftlab/numerics/quadrature.hpp"
#include "ftlab/simd/kernels.hpp"
#include "ftlab/special/airy.hpp"

namespace ftlab {

NystromOperator build_nystrom(double s, double temperature, int m, double scale) {
  if (m < 8) throw DomainError("build_nystrom: need at least 8 nodes");
  if (!(scale > 0.0)) throw DomainError("build_nystrom: map scale must be positive");
  if (!(temperature > 0.0)) throw DomainError("build_nystrom: T must be positive");
  if (s > 30.0) throw DomainError("build_nystrom: s must not exceed 30");

  NystromOperator op;
  op.s = s;
  op.temperature = temperature;
  op.scale = scale;
  const auto n = static_cast<std::size_t>(m);
  const QuadratureRule& rule = cached_gauss_legendre(m);
  const SemiInfiniteMap map(s, scale);
  op.nodes.resize(n);
  op.sqrt_weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    op.nodes[i] = map.transform(u);
    op.sqrt_weights[i] = std::sqrt(0.5 * rule.weights[i] * map.jacobian(u));
  }

  op.kernel_matrix = SquareMatrix(n);
  if (std::isinf(temperature)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double k = op.sqrt_weights[i] * airy_kernel(op.nodes[i], op.nodes[j]) * op.sqrt_weights[j];
        op.kernel_matrix(i, j) = k;
        op.kernel_matrix(j, i) = k;
      }
  } else {
    // K_T(x_i, x_j) = sum_z W_z Ai(x_i + z) Ai(x_j + z) over one shared zeta rule.
    const double tc = std::cbrt(temperature);
    const ZetaWindow win = zeta_window(temperature, op.nodes.front());
    const NodeSet zeta = expand(zeta_scheme(win, temperature));
    std::vector<double> wz(zeta.size());
    for (std::size_t k = 0; k < zeta.size(); ++k) wz[k] = zeta.w[k] * fermi_factor(zeta.x[k], tc);
    std::vector<std::vector<double>> ai(n, std::vector<double>(zeta.size()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < zeta.size(); ++k) ai[i][k] = airy_or_zero(op.nodes[i] + zeta.x[k]).ai;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double k = op.sqrt_weights[i] * simd::weighted_dot(wz, ai[i], ai[j]) * op.sqrt_weights[j];
        op.kernel_matrix(i, j) = k;
        op.kernel_matrix(j, i) = k;
      }
  }
  const SpectralBounds b = symmetric_spectrum_bounds(op.kernel_matrix);
  op.spectrum_lo = b.lo;
  op.spectrum_hi = b.hi;
  return op;
}

double fredholm_logdet(const NystromOperator& op) {
  if (op.spectrum_lo <= -1e-6 || op.spectrum_hi >= 1.0 + 1e-6)
    throw InconsistencyError("fredholm: kernel spectrum outside (-1e-6, 1 + 1e-6)");
  const std::size_t n = op.kernel_matrix.order();
  SquareMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - op.kernel_matrix(i, j);
  const LogDet d = lu_logdet(a);
  if (d.sign <= 0) throw InconsistencyError("fredholm: det(I - K) is not positive");
  return d.log_abs_det;
}

double fredholm_det_ft(double s, double temperature, int m, double scale) {
  return std::exp(fredholm_logdet(build_nystrom(s, temperature, m, scale)));
}

double fredholm_det_airy(double s, int m, double scale) {
  return std::exp(fredholm_logdet(build_nystrom(s, kClassicalAiry, m, scale)));
}

}  // namespace ftlab
