#include "ftlab/ensemble/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ftlab/errors.hpp"
#include "ftlab/simd/kernels.hpp"

namespace ftlab {

RecurrenceTable stieltjes_recurrence(const NodeSet& grid, std::span<const double> log_weight, std::size_t k_max,
                                     OrthonormalVectors* vectors) {
  const std::size_t m = grid.size();
  if (log_weight.size() != m) throw DomainError("stieltjes_recurrence: weight size mismatch");
  if (k_max == 0 || static_cast<double>(k_max) > 0.4 * static_cast<double>(m))
    throw DomainError("stieltjes_recurrence: K must be positive and at most 0.4 x node count");

  // W_i = w_i exp(log_weight_i - shift)
  double shift = -INFINITY;
  for (double lw : log_weight) shift = std::max(shift, lw);
  if (!std::isfinite(shift)) throw DegenerateInput("stieltjes_recurrence: weight vanishes on the grid");
  std::vector<double> sqrt_w(m);
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double wi = grid.w[i] * std::exp(log_weight[i] - shift);
    mass += wi;
    sqrt_w[i] = std::sqrt(wi);
  }
  if (!(mass > 0.0)) throw DegenerateInput("stieltjes_recurrence: zero mass");

  RecurrenceTable t;
  t.alpha.reserve(k_max);
  t.beta.reserve(k_max);
  t.log_h.reserve(k_max);
  t.log_h.push_back(shift + std::log(mass));

  std::vector<double> prev(m, 0.0);
  std::vector<double> cur = sqrt_w;
  simd::scale(1.0 / std::sqrt(mass), cur);
  std::vector<double> next(m);
  if (vectors) vectors->rows.assign(1, cur);

  double b = 0.0;  // sqrt(beta_k)
  for (std::size_t k = 0; k < k_max; ++k) {
    const double alpha = simd::weighted_dot(grid.x, cur, cur);
    t.alpha.push_back(alpha);
    if (k + 1 == k_max) break;
    simd::three_term(grid.x, cur, prev, alpha, b, next);
    const double norm2 = simd::dot(next, next);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
      throw BreakdownError("stieltjes_recurrence: nonpositive beta at k = " + std::to_string(k + 1), k + 1);
    b = std::sqrt(norm2);
    simd::scale(1.0 / b, next);
    t.beta.push_back(norm2);
    t.log_h.push_back(t.log_h.back() + std::log(norm2));
    std::swap(prev, cur);
    std::swap(cur, next);
    if (vectors) vectors->rows.push_back(cur);
  }
  return t;
}

}  // namespace ftlab
