#pragma once

#include <optional>

#include "ftlab/ensemble/deformation.hpp"
#include "ftlab/ensemble/grid.hpp"
#include "ftlab/ensemble/recurrence.hpp"
#include "ftlab/equilibrium/equilibrium.hpp"

namespace ftlab {

/// Finite-n ensemble with weight e^{-nV} sigma_n on the support frame of an
/// equilibrium measure. The undeformed table and its orthonormal vectors are
/// built once; deformed tables are built per s on the same grid.
class EnsembleModel {
 public:
  EnsembleModel(EquilibriumMeasure eq, DeformationQ q, int n, const GridOptions& grid = {});

  int n() const noexcept { return n_; }
  const EquilibriumMeasure& equilibrium() const noexcept { return eq_; }
  const DeformationQ& deformation() const noexcept { return q_; }
  const NodeSet& nodes() const noexcept { return nodes_; }
  const PanelScheme& scheme() const noexcept { return scheme_; }
  const RecurrenceTable& undeformed() const noexcept { return undeformed_; }

  /// log of e^{-nV} sigma_n(x); sigma dropped when s is not given.
  double log_weight(double x, std::optional<double> s) const;
  /// Table of length K (default n) for the deformed weight.
  RecurrenceTable deformed(double s, std::size_t k = 0) const;

  /// sum_{k<n} (log h_k(s) - log h_k(undeformed)).
  double log_lstat_gamma(double s) const;
  /// log det(I - M), M_jk = sum_i u_j u_k (1 - sigma) over undeformed
  /// orthonormal vectors. Throws InconsistencyError when the spectrum of M
  /// leaves [-1e-8, 1 + 1e-8] or det(I - M) <= 0.
  double log_lstat_det(double s) const;

  /// e^{-n(V(x)+V(y))/2} K_n(x, y) for the given table.
  double cd_kernel_weighted(const RecurrenceTable& t, double x, double y) const;
  /// K_n(x, y) without the weight prefactor; may overflow for large n.
  double cd_kernel(const RecurrenceTable& t, double x, double y) const;

  /// int K_n(x,x) omega_n(x) dx on the grid refined once.
  double trace_integral(double s) const;
  /// |int K(x,y)K(y,z) omega(y) dy - K(x,z)| / |K(x,z)| on the refined grid.
  double reproducing_residual(double s, double x, double z) const;

  struct KrasovskyCheck {
    double finite_difference;  // d/ds log Z by central differences of log h
    double fermi_moment;       // int K omega (1 - sigma)
    double kernel_derivative;  // -int d_s K(x,x) omega
  };
  KrasovskyCheck krasovsky(double s, double ds = 1e-3) const;

  /// e^{-n(V(u_n)+V(v_n))/2} K_n(u_n, v_n) / (c_V n^{2/3}), u_n = u / (c_V n^{2/3}).
  double rescaled_edge_kernel(const RecurrenceTable& t, double u, double v) const;
  /// (4 pi / a) exp(2 n ell - log h_{n-1}).
  double norming_ratio(const RecurrenceTable& t) const;

 private:
  std::vector<double> log_weights(const NodeSet& nodes, std::optional<double> s) const;

  EquilibriumMeasure eq_;
  DeformationQ q_;
  int n_;
  double n23_;
  PanelScheme scheme_;
  NodeSet nodes_;
  RecurrenceTable undeformed_;
  OrthonormalVectors vectors_;
};

/// int sigma_1 e^{-V} / int e^{-V} by a one-dimensional composite rule that
/// is independent of the ensemble grid.
double lstat_n1_direct(const Potential& v_shifted, const DeformationQ& q, double s);

}  // namespace ftlab
