#pragma once

#include <span>
#include <vector>

#include "ftlab/numerics/quadrature.hpp"

namespace ftlab {

/// Three-term recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1} of the
/// monic orthogonal polynomials and their log-norms log h_k = log <p_k, p_k>.
struct RecurrenceTable {
  std::vector<double> alpha;  // alpha_0 .. alpha_{K-1}
  std::vector<double> beta;   // beta_1 .. beta_{K-1}, stored from index 0
  std::vector<double> log_h;  // log h_0 .. log h_{K-1}

  std::size_t size() const noexcept { return alpha.size(); }
  /// beta_k for 1 <= k < K.
  double beta_at(std::size_t k) const { return beta.at(k - 1); }
};

/// Orthonormal polynomial values carried per node, row k holding
/// sqrt(W_i) p_k(x_i)/sqrt(h_k) (unit-norm vectors on the grid).
struct OrthonormalVectors {
  std::vector<std::vector<double>> rows;
};

/// Discretized Stieltjes procedure for the weight exp(log_weight) against the
/// rule (x, w). Each step works with unit-norm vectors so the dynamic range of
/// the weight only enters through log h_0; see RecurrenceTable.
/// Requires K <= 0.4 * number of nodes (DomainError). Throws BreakdownError on
/// a nonpositive or non-finite beta.
RecurrenceTable stieltjes_recurrence(const NodeSet& grid, std::span<const double> log_weight, std::size_t k_max,
                                     OrthonormalVectors* vectors = nullptr);

}  // namespace ftlab
