#include "ftlab/ensemble/grid.hpp"

#include <algorithm>
#include <cmath>

#include "ftlab/errors.hpp"

namespace ftlab {

std::vector<double> geometric_breakpoints(double lo, double hi, int count, double first_width) {
  const double len = hi - lo;
  std::vector<double> bp{lo};
  if (count * first_width >= len) {
    for (int i = 1; i <= count; ++i) bp.push_back(lo + len * i / count);
    bp.back() = hi;
    return bp;
  }
  // Ratio q > 1 with first_width (q^count - 1)/(q - 1) = len.
  const auto total = [&](double q) { return first_width * (std::pow(q, count) - 1.0) / (q - 1.0); };
  double q_lo = 1.0 + 1e-12;
  double q_hi = 2.0;
  while (total(q_hi) < len) q_hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (q_lo + q_hi);
    (total(mid) < len ? q_lo : q_hi) = mid;
  }
  double w = first_width;
  for (int i = 1; i < count; ++i) {
    bp.push_back(bp.back() + w);
    w *= q_hi;
  }
  bp.push_back(hi);
  return bp;
}

PanelScheme build_grid(const Potential& v, double a, int n, const GridOptions& opts) {
  if (n < 1 || !(a > 0.0)) throw DegenerateInput("build_grid: need n >= 1 and a > 0");
  const double core_lo = -a - 0.5;
  const double core_hi = 0.5;

  // Hull of {n(V - min V) <= cut}, located by an outward march then bisection.
  const double x_min = v.argmin();
  const double v_min = v(x_min);
  const double cut = opts.energy_cut / n;
  const auto inside = [&](double x) { return v(x) - v_min <= cut; };
  const auto edge = [&](double dir) {
    double step = 0.25 * (a + 1.0);
    double in = x_min;
    double out = x_min + dir * step;
    while (inside(out)) {
      in = out;
      step *= 2.0;
      out = x_min + dir * step;
      if (step > 1e8) throw DegenerateInput("build_grid: unbounded window");
    }
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (in + out);
      (inside(mid) ? in : out) = mid;
    }
    return out;
  };
  double lo = std::min(edge(-1.0), core_lo);
  double hi = std::max(edge(1.0), core_hi);
  const double width = hi - lo;
  if (!(width > 0.0) || !std::isfinite(width)) throw DegenerateInput("build_grid: empty window");
  lo -= 0.5 * opts.widen * width;
  hi += 0.5 * opts.widen * width;

  const int core = static_cast<int>(std::ceil(3.0 * n)) + 20;
  const double panel = (core_hi - core_lo) / core;
  std::vector<double> bp;
  std::vector<double> left = geometric_breakpoints(0.0, core_lo - lo, opts.tail_panels, panel);
  for (auto it = left.rbegin(); it != left.rend(); ++it) bp.push_back(core_lo - *it);
  bp.back() = core_lo;
  for (int i = 1; i <= core; ++i) bp.push_back(core_lo + (core_hi - core_lo) * i / core);
  bp.back() = core_hi;
  std::vector<double> right = geometric_breakpoints(core_hi, hi, opts.tail_panels, panel);
  bp.insert(bp.end(), right.begin() + 1, right.end());
  return PanelScheme(std::move(bp), opts.points_per_panel);
}

}  // namespace ftlab
