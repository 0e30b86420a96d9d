#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ftlab/errors.hpp"

namespace ftlab {

/// Interpolatory rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// m-point Gauss-Legendre rule. Nodes are refined by Newton iteration on P_m
/// from Chebyshev-type initial guesses until the update drops below 1e-15.
/// Throws InternalError if a node needs more than 100 Newton steps.
QuadratureRule gauss_legendre(int m);

/// Process-wide cache in front of gauss_legendre; safe to call concurrently.
const QuadratureRule& cached_gauss_legendre(int m);

/// Composite partition of an interval into panels.
class PanelScheme {
 public:
  PanelScheme(std::vector<double> breakpoints, int points_per_panel);

  /// n equal panels on [lo, hi].
  static PanelScheme uniform(double lo, double hi, int panels, int points_per_panel);

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  int points_per_panel() const noexcept { return points_per_panel_; }
  std::size_t panel_count() const noexcept { return breakpoints_.size() - 1; }
  std::size_t node_count() const noexcept { return panel_count() * static_cast<std::size_t>(points_per_panel_); }
  double lower() const noexcept { return breakpoints_.front(); }
  double upper() const noexcept { return breakpoints_.back(); }

  /// Scheme with every panel split in two.
  PanelScheme refined() const;

 private:
  std::vector<double> breakpoints_;
  int points_per_panel_;
};

/// Flattened nodes and weights of a panel scheme under a rule.
struct NodeSet {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const noexcept { return x.size(); }
};

NodeSet expand(const PanelScheme& scheme, const QuadratureRule& rule);
inline NodeSet expand(const PanelScheme& scheme) {
  return expand(scheme, cached_gauss_legendre(scheme.points_per_panel()));
}

/// Sum over panels of affinely mapped rule sums, accumulated left to right.
/// Throws EvaluationError carrying the node when f is not finite there.
template <class F>
double integrate_panels(F&& f, const PanelScheme& scheme, const QuadratureRule& rule) {
  const auto bp = scheme.breakpoints();
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double half = 0.5 * (bp[p + 1] - bp[p]);
    const double mid = 0.5 * (bp[p + 1] + bp[p]);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double x = mid + half * rule.nodes[k];
      const double fx = f(x);
      if (!std::isfinite(fx)) throw EvaluationError("integrand not finite at node " + std::to_string(x), x);
      panel += rule.weights[k] * fx;
    }
    total += half * panel;
  }
  return total;
}

template <class F>
double integrate_panels(F&& f, const PanelScheme& scheme) {
  return integrate_panels(std::forward<F>(f), scheme, cached_gauss_legendre(scheme.points_per_panel()));
}

/// Breakpoints lo < ... < hi graded geometrically towards lo: the panel next to
/// lo has width (hi - lo) * ratio^(levels - 1) and the others grow by 1/ratio.
std::vector<double> graded_breakpoints(double lo, double hi, int levels, double ratio = 0.5);

/// Rational map of [0, 1) onto [-s, inf): x = -s + L u / (1 - u).
class SemiInfiniteMap {
 public:
  SemiInfiniteMap(double s, double scale);

  double transform(double u) const;
  double jacobian(double u) const;
  double s() const noexcept { return s_; }
  double scale() const noexcept { return scale_; }

 private:
  double s_;
  double scale_;
};

SemiInfiniteMap map_semi_infinite(double s, double scale);

}  // namespace ftlab
