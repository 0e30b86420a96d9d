#include "ftlab/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace ftlab::simd {

namespace {

// Lane layout mirrors the AVX2 path: two 2-lane accumulator pairs stand in for
// one 4-lane register, combined as ((l0 + l1) + (l2 + l3)).
inline double combine(float64x2_t lo, float64x2_t hi) {
  return (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0), a2 = vdupq_n_f64(0.0), a3 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = vfmaq_f64(a0, vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i)), vld1q_f64(b + i));
    a1 = vfmaq_f64(a1, vmulq_f64(vld1q_f64(w + i + 2), vld1q_f64(a + i + 2)), vld1q_f64(b + i + 2));
    a2 = vfmaq_f64(a2, vmulq_f64(vld1q_f64(w + i + 4), vld1q_f64(a + i + 4)), vld1q_f64(b + i + 4));
    a3 = vfmaq_f64(a3, vmulq_f64(vld1q_f64(w + i + 6), vld1q_f64(a + i + 6)), vld1q_f64(b + i + 6));
  }
  for (; i + 4 <= n; i += 4) {
    a0 = vfmaq_f64(a0, vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i)), vld1q_f64(b + i));
    a1 = vfmaq_f64(a1, vmulq_f64(vld1q_f64(w + i + 2), vld1q_f64(a + i + 2)), vld1q_f64(b + i + 2));
  }
  double s = combine(vaddq_f64(a0, a2), vaddq_f64(a1, a3));
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0), a2 = vdupq_n_f64(0.0), a3 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = vfmaq_f64(a0, vld1q_f64(a + i), vld1q_f64(b + i));
    a1 = vfmaq_f64(a1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    a2 = vfmaq_f64(a2, vld1q_f64(a + i + 4), vld1q_f64(b + i + 4));
    a3 = vfmaq_f64(a3, vld1q_f64(a + i + 6), vld1q_f64(b + i + 6));
  }
  for (; i + 4 <= n; i += 4) {
    a0 = vfmaq_f64(a0, vld1q_f64(a + i), vld1q_f64(b + i));
    a1 = vfmaq_f64(a1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = combine(vaddq_f64(a0, a2), vaddq_f64(a1, a3));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_sum_sq(const double* w, const double* a, std::size_t n) { return weighted_dot(w, a, a, n); }

void three_term(const double* x, const double* q, const double* p, double alpha, double c, double* out,
                std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xm = vsubq_f64(vld1q_f64(x + i), va);
    const float64x2_t cp = vmulq_f64(vc, vld1q_f64(p + i));
    vst1q_f64(out + i, vnegq_f64(vfmsq_f64(cp, xm, vld1q_f64(q + i))));
  }
  for (; i < n; ++i) out[i] = (x[i] - alpha) * q[i] - c * p[i];
}

void shifted_product(const double* x, double shift, const double* y, double* out, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(shift);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vaddq_f64(vld1q_f64(x + i), vs), vld1q_f64(y + i)));
  for (; i < n; ++i) out[i] = (x[i] + shift) * y[i];
}

void axpy_to(const double* y, double a, const double* k, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(k + i)));
  for (; i < n; ++i) out[i] = y[i] + a * k[i];
}

void scale(double a, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmulq_f64(va, vld1q_f64(y + i)));
  for (; i < n; ++i) y[i] *= a;
}

constexpr KernelTable table{Backend::neon, dot, weighted_dot, weighted_sum_sq, three_term,
                            shifted_product, axpy_to, scale};

}  // namespace

const KernelTable* neon_kernels() noexcept { return &table; }

}  // namespace ftlab::simd

#else

namespace ftlab::simd {
const KernelTable* neon_kernels() noexcept { return nullptr; }
}  // namespace ftlab::simd

#endif
