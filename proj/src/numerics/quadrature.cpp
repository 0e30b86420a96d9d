#include "ftlab/numerics/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace ftlab {

namespace {

struct LegendreValue {
  double p;
  double dp;
};

// Three-term recurrence for P_m and its derivative.
LegendreValue legendre(int m, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (m == 0) return {1.0, 0.0};
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = m * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw DomainError("gauss_legendre: m must be positive");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  if (m == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    LegendreValue v{};
    int iter = 0;
    for (;; ++iter) {
      if (iter >= 100) throw InternalError("gauss_legendre: Newton did not converge");
      v = legendre(m, x);
      const double dx = v.p / v.dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    v = legendre(m, x);
    const double w = 2.0 / ((1.0 - x * x) * v.dp * v.dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(m - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

const QuadratureRule& cached_gauss_legendre(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_legendre(m));
  return *slot;
}

PanelScheme::PanelScheme(std::vector<double> breakpoints, int points_per_panel)
    : breakpoints_(std::move(breakpoints)), points_per_panel_(points_per_panel) {
  if (breakpoints_.size() < 2) throw DomainError("PanelScheme: need at least one panel");
  if (points_per_panel_ < 1) throw DomainError("PanelScheme: points_per_panel must be positive");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw DomainError("PanelScheme: breakpoints must be strictly increasing");
  }
}

PanelScheme PanelScheme::uniform(double lo, double hi, int panels, int points_per_panel) {
  if (panels < 1) throw DomainError("PanelScheme::uniform: need at least one panel");
  std::vector<double> bp(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) bp[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / panels;
  bp.back() = hi;
  return PanelScheme(std::move(bp), points_per_panel);
}

PanelScheme PanelScheme::refined() const {
  std::vector<double> bp;
  bp.reserve(2 * breakpoints_.size());
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    bp.push_back(breakpoints_[i]);
    bp.push_back(0.5 * (breakpoints_[i] + breakpoints_[i + 1]));
  }
  bp.push_back(breakpoints_.back());
  return PanelScheme(std::move(bp), points_per_panel_);
}

NodeSet expand(const PanelScheme& scheme, const QuadratureRule& rule) {
  NodeSet out;
  out.x.reserve(scheme.panel_count() * rule.size());
  out.w.reserve(scheme.panel_count() * rule.size());
  const auto bp = scheme.breakpoints();
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double half = 0.5 * (bp[p + 1] - bp[p]);
    const double mid = 0.5 * (bp[p + 1] + bp[p]);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      out.x.push_back(mid + half * rule.nodes[k]);
      out.w.push_back(half * rule.weights[k]);
    }
  }
  return out;
}

std::vector<double> graded_breakpoints(double lo, double hi, int levels, double ratio) {
  if (levels < 1 || !(hi > lo) || !(ratio > 0.0 && ratio < 1.0))
    throw DomainError("graded_breakpoints: invalid arguments");
  std::vector<double> bp(static_cast<std::size_t>(levels) + 1);
  bp[0] = lo;
  bp.back() = hi;
  double frac = 1.0;
  for (int k = levels - 1; k >= 1; --k) {
    frac *= ratio;
    bp[static_cast<std::size_t>(k)] = lo + (hi - lo) * frac;
  }
  return bp;
}

SemiInfiniteMap::SemiInfiniteMap(double s, double scale) : s_(s), scale_(scale) {
  if (!(scale > 0.0)) throw DomainError("map_semi_infinite: scale must be positive");
}

double SemiInfiniteMap::transform(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("map_semi_infinite: u outside [0,1)");
  return -s_ + scale_ * u / (1.0 - u);
}

double SemiInfiniteMap::jacobian(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("map_semi_infinite: u outside [0,1)");
  return scale_ / ((1.0 - u) * (1.0 - u));
}

SemiInfiniteMap map_semi_infinite(double s, double scale) { return SemiInfiniteMap(s, scale); }

}  // namespace ftlab
