#include "ftlab/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#define FTLAB_AVX2 __attribute__((target("avx2,fma")))

namespace ftlab::simd {

namespace {

FTLAB_AVX2 inline double hsum(__m256d v) {
  // ((l0 + l1) + (l2 + l3)), fixed order
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const double l0 = _mm_cvtsd_f64(lo);
  const double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  const double l2 = _mm_cvtsd_f64(hi);
  const double l3 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
  return (l0 + l1) + (l2 + l3);
}

FTLAB_AVX2 double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

FTLAB_AVX2 double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d wa0 = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    const __m256d wa1 = _mm256_mul_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(a + i + 4));
    acc0 = _mm256_fmadd_pd(wa0, _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(wa1, _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    acc0 = _mm256_fmadd_pd(wa, _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

FTLAB_AVX2 double weighted_sum_sq(const double* w, const double* a, std::size_t n) {
  return weighted_dot(w, a, a, n);
}

FTLAB_AVX2 void three_term(const double* x, const double* q, const double* p, double alpha, double c, double* out,
                           std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xm = _mm256_sub_pd(_mm256_loadu_pd(x + i), va);
    const __m256d cp = _mm256_mul_pd(vc, _mm256_loadu_pd(p + i));
    _mm256_storeu_pd(out + i, _mm256_fmsub_pd(xm, _mm256_loadu_pd(q + i), cp));
  }
  for (; i < n; ++i) out[i] = (x[i] - alpha) * q[i] - c * p[i];
}

FTLAB_AVX2 void shifted_product(const double* x, double shift, const double* y, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(shift);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_add_pd(_mm256_loadu_pd(x + i), vs), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) out[i] = (x[i] + shift) * y[i];
}

FTLAB_AVX2 void axpy_to(const double* y, double a, const double* k, double* out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(k + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) out[i] = y[i] + a * k[i];
}

FTLAB_AVX2 void scale(double a, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] *= a;
}

constexpr KernelTable table{Backend::avx2, dot, weighted_dot, weighted_sum_sq, three_term,
                            shifted_product, axpy_to, scale};

}  // namespace

const KernelTable* avx2_kernels() noexcept { return &table; }

}  // namespace ftlab::simd

#else

namespace ftlab::simd {
const KernelTable* avx2_kernels() noexcept { return nullptr; }
}  // namespace ftlab::simd

#endif
