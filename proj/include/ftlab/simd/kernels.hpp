#pragma once

// Data-parallel inner loops shared by the quadrature-heavy modules.
//
// Every kernel has a scalar reference implementation; AVX2+FMA (x86-64) and
// NEON (aarch64) variants are compiled alongside and one table is selected at
// first use. Reductions use a fixed lane layout and a fixed combine order, so
// results are reproducible for a given backend. The backend can be pinned with
// FTLAB_SIMD=scalar|avx2|neon (unavailable choices fall back to scalar).

#include <cstddef>
#include <span>
#include <string_view>

namespace ftlab::simd {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
  Backend backend;
  /// sum_i a_i b_i
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// sum_i w_i a_i b_i
  double (*weighted_dot)(const double* w, const double* a, const double* b, std::size_t n);
  /// sum_i w_i a_i^2
  double (*weighted_sum_sq)(const double* w, const double* a, std::size_t n);
  /// out_i = (x_i - alpha) q_i - c p_i
  void (*three_term)(const double* x, const double* q, const double* p, double alpha, double c, double* out,
                     std::size_t n);
  /// out_i = (x_i + shift) y_i
  void (*shifted_product)(const double* x, double shift, const double* y, double* out, std::size_t n);
  /// out_i = y_i + a k_i
  void (*axpy_to)(const double* y, double a, const double* k, double* out, std::size_t n);
  /// y_i *= a
  void (*scale)(double a, double* y, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
/// Null when the backend was not compiled in for this target.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

bool backend_available(Backend b) noexcept;
const KernelTable& kernels_for(Backend b) noexcept;
/// Table chosen once per process from CPU features and FTLAB_SIMD.
const KernelTable& active() noexcept;
std::string_view backend_name(Backend b) noexcept;

// Span conveniences over the active table.
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  return active().weighted_dot(w.data(), a.data(), b.data(), w.size());
}
inline double weighted_sum_sq(std::span<const double> w, std::span<const double> a) {
  return active().weighted_sum_sq(w.data(), a.data(), w.size());
}
inline void three_term(std::span<const double> x, std::span<const double> q, std::span<const double> p, double alpha,
                       double c, std::span<double> out) {
  active().three_term(x.data(), q.data(), p.data(), alpha, c, out.data(), x.size());
}
inline void shifted_product(std::span<const double> x, double shift, std::span<const double> y,
                            std::span<double> out) {
  active().shifted_product(x.data(), shift, y.data(), out.data(), x.size());
}
inline void axpy_to(std::span<const double> y, double a, std::span<const double> k, std::span<double> out) {
  active().axpy_to(y.data(), a, k.data(), out.data(), y.size());
}
inline void scale(double a, std::span<double> y) { active().scale(a, y.data(), y.size()); }

}  // namespace ftlab::simd
