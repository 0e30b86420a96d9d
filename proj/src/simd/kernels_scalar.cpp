#include "ftlab/simd/kernels.hpp"

namespace ftlab::simd {

namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

double weighted_sum_sq(const double* w, const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * a[i];
  return s;
}

void three_term(const double* x, const double* q, const double* p, double alpha, double c, double* out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - alpha) * q[i] - c * p[i];
}

void shifted_product(const double* x, double shift, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] + shift) * y[i];
}

void axpy_to(const double* y, double a, const double* k, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + a * k[i];
}

void scale(double a, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

constexpr KernelTable table{Backend::scalar, dot, weighted_dot, weighted_sum_sq, three_term,
                            shifted_product, axpy_to, scale};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return table; }

}  // namespace ftlab::simd
