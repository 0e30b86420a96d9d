#include "ftlab/ensemble/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/linalg.hpp"
#include "ftlab/simd/kernels.hpp"

namespace ftlab {

namespace {

// Orthonormal values times the weight prefactor, with a running log scale so
// large n cannot overflow.
struct ScaledOrthonormal {
  const RecurrenceTable& t;
  double x;
  double cur = 1.0;
  double prev = 0.0;
  double log_scale;
  std::size_t k = 0;

  ScaledOrthonormal(const RecurrenceTable& table, double xx, double log_prefactor)
      : t(table), x(xx), log_scale(log_prefactor - 0.5 * table.log_h[0]) {}

  double value() const { return cur; }
  void advance() {
    const double b_prev = k == 0 ? 0.0 : std::sqrt(t.beta_at(k));
    const double b_next = std::sqrt(t.beta_at(k + 1));
    const double nxt = ((x - t.alpha[k]) * cur - b_prev * prev) / b_next;
    prev = cur;
    cur = nxt;
    ++k;
  }
  // Returns the factor applied so the caller can rescale partial sums.
  double renormalize() {
    const double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      const double f = 1.0 / mag;
      cur *= f;
      prev *= f;
      log_scale -= std::log(f);
      return f;
    }
    return 1.0;
  }
};

double kernel_sum(const RecurrenceTable& t, int n, double x, double y, double log_px, double log_py) {
  if (t.size() < static_cast<std::size_t>(n)) throw DomainError("cd_kernel: table shorter than n");
  ScaledOrthonormal px(t, x, log_px);
  ScaledOrthonormal py(t, y, log_py);
  double sum = px.value() * py.value();
  for (int k = 1; k < n; ++k) {
    px.advance();
    py.advance();
    sum *= px.renormalize() * py.renormalize();
    sum += px.value() * py.value();
  }
  return sum * std::exp(px.log_scale + py.log_scale);
}

}  // namespace

EnsembleModel::EnsembleModel(EquilibriumMeasure eq, DeformationQ q, int n, const GridOptions& grid)
    : eq_(std::move(eq)),
      q_(std::move(q)),
      n_(n),
      n23_(std::pow(static_cast<double>(n), 2.0 / 3.0)),
      scheme_(build_grid(eq_.shifted_potential(), eq_.a(), n, grid)),
      nodes_(expand(scheme_)) {
  const auto lw = log_weights(nodes_, std::nullopt);
  undeformed_ = stieltjes_recurrence(nodes_, lw, static_cast<std::size_t>(n), &vectors_);
}

double EnsembleModel::log_weight(double x, std::optional<double> s) const {
  const double base = -n_ * eq_.shifted_potential()(x);
  return s ? base + log_sigma_scaled(q_, n23_, *s, x) : base;
}

std::vector<double> EnsembleModel::log_weights(const NodeSet& nodes, std::optional<double> s) const {
  std::vector<double> lw(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) lw[i] = log_weight(nodes.x[i], s);
  return lw;
}

RecurrenceTable EnsembleModel::deformed(double s, std::size_t k) const {
  return stieltjes_recurrence(nodes_, log_weights(nodes_, s), k == 0 ? static_cast<std::size_t>(n_) : k);
}

double EnsembleModel::log_lstat_gamma(double s) const {
  const RecurrenceTable t = deformed(s);
  double acc = 0.0;
  for (int k = 0; k < n_; ++k) acc += t.log_h[static_cast<std::size_t>(k)] - undeformed_.log_h[static_cast<std::size_t>(k)];
  return acc;
}

double EnsembleModel::log_lstat_det(double s) const {
  const std::size_t m = nodes_.size();
  std::vector<double> one_minus_sigma(m);
  for (std::size_t i = 0; i < m; ++i) one_minus_sigma[i] = -std::expm1(log_sigma_scaled(q_, n23_, s, nodes_.x[i]));
  const auto n = static_cast<std::size_t>(n_);
  SquareMatrix mat(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k <= j; ++k) {
      const double v = simd::weighted_dot(one_minus_sigma, vectors_.rows[j], vectors_.rows[k]);
      mat(j, k) = v;
      mat(k, j) = v;
    }
  const SpectralBounds b = symmetric_spectrum_bounds(mat);
  if (b.lo < -1e-8 || b.hi > 1.0 + 1e-8) throw InconsistencyError("log_lstat_det: spectrum of M outside [0, 1]");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) mat(j, k) = (j == k ? 1.0 : 0.0) - mat(j, k);
  const LogDet d = lu_logdet(mat);
  if (d.sign <= 0) throw InconsistencyError("log_lstat_det: det(I - M) is not positive");
  return d.log_abs_det;
}

double EnsembleModel::cd_kernel_weighted(const RecurrenceTable& t, double x, double y) const {
  const auto& v = eq_.shifted_potential();
  return kernel_sum(t, n_, x, y, -0.5 * n_ * v(x), -0.5 * n_ * v(y));
}

double EnsembleModel::cd_kernel(const RecurrenceTable& t, double x, double y) const {
  return kernel_sum(t, n_, x, y, 0.0, 0.0);
}

double EnsembleModel::trace_integral(double s) const {
  const RecurrenceTable t = deformed(s);
  const NodeSet fine = expand(scheme_.refined());
  double acc = 0.0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const double x = fine.x[i];
    acc += fine.w[i] * cd_kernel_weighted(t, x, x) * std::exp(log_sigma_scaled(q_, n23_, s, x));
  }
  return acc;
}

double EnsembleModel::reproducing_residual(double s, double x, double z) const {
  const RecurrenceTable t = deformed(s);
  const NodeSet fine = expand(scheme_.refined());
  double acc = 0.0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const double y = fine.x[i];
    acc += fine.w[i] * cd_kernel_weighted(t, x, y) * cd_kernel_weighted(t, y, z) *
           std::exp(log_sigma_scaled(q_, n23_, s, y));
  }
  const double direct = cd_kernel_weighted(t, x, z);
  return std::abs(acc - direct) / std::abs(direct);
}

EnsembleModel::KrasovskyCheck EnsembleModel::krasovsky(double s, double ds) const {
  const auto log_z = [&](double ss) {
    const RecurrenceTable t = deformed(ss);
    double acc = 0.0;
    for (double v : t.log_h) acc += v;
    return acc;
  };
  KrasovskyCheck out{};
  out.finite_difference = (log_z(s + ds) - log_z(s - ds)) / (2.0 * ds);

  const RecurrenceTable t0 = deformed(s);
  const RecurrenceTable tp = deformed(s + ds);
  const RecurrenceTable tm = deformed(s - ds);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double x = nodes_.x[i];
    const double ls = log_sigma_scaled(q_, n23_, s, x);
    const double w = nodes_.w[i] * std::exp(ls);
    out.fermi_moment += w * cd_kernel_weighted(t0, x, x) * (-std::expm1(ls));
    out.kernel_derivative -= w * (cd_kernel_weighted(tp, x, x) - cd_kernel_weighted(tm, x, x)) / (2.0 * ds);
  }
  return out;
}

double EnsembleModel::rescaled_edge_kernel(const RecurrenceTable& t, double u, double v) const {
  const double scale = eq_.c_v() * n23_;
  return cd_kernel_weighted(t, u / scale, v / scale) / scale;
}

double EnsembleModel::norming_ratio(const RecurrenceTable& t) const {
  if (t.size() < static_cast<std::size_t>(n_)) throw DomainError("norming_ratio: table shorter than n");
  return 4.0 * std::numbers::pi / eq_.a() *
         std::exp(2.0 * n_ * eq_.ell() - t.log_h[static_cast<std::size_t>(n_ - 1)]);
}

double lstat_n1_direct(const Potential& v, const DeformationQ& q, double s) {
  const double x0 = v.argmin();
  // e^{-(V - V(x0))} drops below 1e-30 well inside +-40 for the admissible potentials.
  double lo = x0 - 1.0;
  double hi = x0 + 1.0;
  while (v(lo) - v(x0) < 80.0) lo -= 1.0;
  while (v(hi) - v(x0) < 80.0) hi += 1.0;
  const auto scheme = PanelScheme::uniform(lo, hi, 400, 20);
  const double vmin = v(x0);
  const double den = integrate_panels([&](double x) { return std::exp(-(v(x) - vmin)); }, scheme);
  const double num = integrate_panels(
      [&](double x) { return std::exp(-(v(x) - vmin) + log_sigma_scaled(q, 1.0, s, x)); }, scheme);
  return num / den;
}

}  // namespace ftlab
