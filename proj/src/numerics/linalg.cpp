#include "ftlab/numerics/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "ftlab/errors.hpp"

namespace ftlab {

namespace {
using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const SquareMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  return Eigen::Map<const RowMajor>(a.data().data(), n, n);
}
}  // namespace

SquareMatrix::SquareMatrix(std::size_t order, std::vector<double> row_major)
    : order_(order), data_(std::move(row_major)) {
  if (data_.size() != order_ * order_) throw DomainError("SquareMatrix: entry count must equal order^2");
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

double SquareMatrix::asymmetry() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw DomainError("SquareMatrix product: order mismatch");
  RowMajor prod = view(a) * view(b);
  return SquareMatrix(a.order(), std::vector<double>(prod.data(), prod.data() + prod.size()));
}

LogDet lu_logdet(const SquareMatrix& a) {
  for (double v : a.data())
    if (!std::isfinite(v)) throw DomainError("lu_logdet: non-finite matrix entry");
  if (a.order() == 0) return {1, 0.0};

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(view(a));
  const Eigen::MatrixXd& packed = lu.matrixLU();
  int sign = lu.permutationP().determinant() > 0 ? 1 : -1;
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double pivot = packed(i, i);
    if (pivot == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    if (pivot < 0.0) sign = -sign;
    log_abs += std::log(std::abs(pivot));
  }
  return {sign, log_abs};
}

SpectralBounds symmetric_spectrum_bounds(const SquareMatrix& a) {
  if (a.order() == 0) return {0.0, 0.0};
  const Eigen::MatrixXd sym = 0.5 * (view(a) + view(a).transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalError("symmetric_spectrum_bounds: eigensolver failed");
  return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

SpectralBounds gershgorin_bounds(const SquareMatrix& a) noexcept {
  SpectralBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < a.order(); ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < a.order(); ++j)
      if (j != i) radius += std::abs(a(i, j));
    b.lo = std::min(b.lo, a(i, i) - radius);
    b.hi = std::max(b.hi, a(i, i) + radius);
  }
  return b;
}

}  // namespace ftlab
