#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ftlab {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, double fill = 0.0) : order_(order), data_(order * order, fill) {}
  SquareMatrix(std::size_t order, std::vector<double> row_major);

  static SquareMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * order_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }
  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * order_, order_}; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * order_, order_}; }
  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  /// Largest |a_ij - a_ji|.
  double asymmetry() const noexcept;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

struct LogDet {
  int sign;            // +1, -1, or 0 for an exactly singular pivot
  double log_abs_det;  // -inf when sign == 0
};

/// LU with partial pivoting. Throws DomainError on non-finite entries.
LogDet lu_logdet(const SquareMatrix& a);

/// Smallest and largest eigenvalue of the symmetric part of a.
struct SpectralBounds {
  double lo;
  double hi;
};
SpectralBounds symmetric_spectrum_bounds(const SquareMatrix& a);

/// Gershgorin enclosure of the spectrum (row radii).
SpectralBounds gershgorin_bounds(const SquareMatrix& a) noexcept;

}  // namespace ftlab
