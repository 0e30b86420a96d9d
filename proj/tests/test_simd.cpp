#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ftlab/simd/kernels.hpp"

using namespace ftlab;

namespace {

std::vector<const simd::KernelTable*> vector_backends() {
  std::vector<const simd::KernelTable*> out;
  for (auto b : {simd::Backend::avx2, simd::Backend::neon})
    if (simd::backend_available(b)) out.push_back(&simd::kernels_for(b));
  return out;
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("environment pin selects the scalar table") {
  const char* env = std::getenv("FTLAB_SIMD");
  if (env && std::string(env) == "scalar") CHECK(simd::active().backend == simd::Backend::scalar);
  CHECK(simd::kernels_for(simd::Backend::scalar).backend == simd::Backend::scalar);
  MESSAGE("active backend: " << simd::backend_name(simd::active().backend));
}

TEST_CASE("vector backends match the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(2024);
  // Lengths straddle the lane widths and the unrolled block sizes.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 31u, 64u, 129u, 1126u}) {
    const auto a = random_vector(n, rng), b = random_vector(n, rng), w = random_vector(n, rng);
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(w[i] * a[i] * b[i]) + std::abs(a[i] * b[i]) + w[i] * w[i];
    const double tol = 1e-15 * (mag + 1.0) * 8;
    for (const auto* k : vector_backends()) {
      INFO("backend " << simd::backend_name(k->backend) << " n=" << n);
      CHECK(std::abs(k->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <= tol);
      CHECK(std::abs(k->weighted_dot(w.data(), a.data(), b.data(), n) -
                     ref.weighted_dot(w.data(), a.data(), b.data(), n)) <= tol);
      CHECK(std::abs(k->weighted_sum_sq(w.data(), a.data(), n) - ref.weighted_sum_sq(w.data(), a.data(), n)) <= tol);

      std::vector<double> o1(n), o2(n);
      ref.three_term(a.data(), b.data(), w.data(), 0.3, -1.7, o1.data(), n);
      k->three_term(a.data(), b.data(), w.data(), 0.3, -1.7, o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) <= 1e-14);
      ref.shifted_product(a.data(), 0.8, b.data(), o1.data(), n);
      k->shifted_product(a.data(), 0.8, b.data(), o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) <= 1e-14);
      ref.axpy_to(a.data(), -0.25, b.data(), o1.data(), n);
      k->axpy_to(a.data(), -0.25, b.data(), o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) <= 1e-14);
      o1 = a;
      o2 = a;
      ref.scale(1.5, o1.data(), n);
      k->scale(1.5, o2.data(), n);
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("reductions are reproducible run to run") {
  std::mt19937_64 rng(5);
  const auto a = random_vector(999, rng), w = random_vector(999, rng);
  const double first = simd::weighted_sum_sq(w, a);
  for (int i = 0; i < 5; ++i) CHECK(simd::weighted_sum_sq(w, a) == first);
}

TEST_CASE("scalar kernels against direct loops") {
  const auto& k = simd::scalar_kernels();
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6}, w{0.5, 1, 2};
  CHECK(k.dot(a.data(), b.data(), 3) == 32.0);
  CHECK(k.weighted_dot(w.data(), a.data(), b.data(), 3) == 2.0 + 10.0 + 36.0);
  CHECK(k.weighted_sum_sq(w.data(), a.data(), 3) == 0.5 + 4.0 + 18.0);
  std::vector<double> out(3);
  k.shifted_product(a.data(), 1.0, b.data(), out.data(), 3);
  CHECK(out == std::vector<double>{8, 15, 24});
}

}
