#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftlab/errors.hpp"
#include "ftlab/fredholm/airy_kernels.hpp"
#include "ftlab/fredholm/nystrom.hpp"
#include "ftlab/special/airy.hpp"

using namespace ftlab;

TEST_SUITE("fredholm") {

TEST_CASE("classical Airy kernel") {
  const double aip0 = airy_ai_prime(0.0);
  CHECK(std::abs(airy_kernel(0.0, 0.0) - aip0 * aip0) < 1e-15);
  CHECK(std::abs(airy_kernel(0.0, 0.0) - 0.066987) < 1e-6);
  CHECK(airy_kernel(0.3, 1.1) == doctest::Approx(airy_kernel(1.1, 0.3)).epsilon(1e-14));
  CHECK(std::abs(airy_kernel(0.7, 0.7 + 1e-7) - airy_kernel(0.7, 0.7)) < 1e-6);
  CHECK(std::abs(airy_kernel(-2.0, -2.0 + 1e-7) - airy_kernel(-2.0, -2.0)) < 1e-6);
}

TEST_CASE("finite-temperature kernel basics") {
  for (double t : {0.125, 1.0, 8.0}) {
    CHECK(ft_airy_kernel(0.3, -1.4, t) == doctest::Approx(ft_airy_kernel(-1.4, 0.3, t)).epsilon(1e-13));
    for (double u : {-10.0, -1.0, 0.0, 3.0}) CHECK(ft_airy_kernel(u, u, t) >= 0.0);
    // Decay is only exponential at finite T (rate T^{1/3}), from the Fermi tail.
    CHECK(ft_airy_kernel(10.0, 10.0, t) < ft_airy_kernel(5.0, 5.0, t));
    CHECK(std::abs(ft_airy_kernel(40.0, 41.0, t)) < 1e-6 * ft_airy_kernel(0.0, 0.0, t));
  }
  CHECK_THROWS_AS(ft_airy_kernel(-31.0, 0.0, 1.0), DomainError);
  CHECK(fermi_factor(-1e4, 1.0) == 0.0);
  CHECK(fermi_factor(1e4, 1.0) == 1.0);
  CHECK(fermi_factor(0.0, 3.0) == 0.5);
}

TEST_CASE("high temperature approaches the Airy kernel at the predicted rate") {
  // Sommerfeld expansion of the smeared step: K_T(0,0) - K(0,0) is
  // -(pi^2/6) T^{-2/3} d/dz Ai(z)^2 at z = 0 to leading order.
  const double t = 1000.0;
  const double diff = ft_airy_kernel(0.0, 0.0, t) - airy_kernel(0.0, 0.0);
  const double predicted = -2.0 * airy_ai(0.0) * airy_ai_prime(0.0) * std::numbers::pi * std::numbers::pi / 6.0 /
                           std::pow(t, 2.0 / 3.0);
  CHECK(std::abs(diff - predicted) < 0.05 * predicted);
  CHECK(std::abs(diff) < 3.5e-3);
}

TEST_CASE("Nystrom operator") {
  const auto op = build_nystrom(0.0, 1.0, 40);
  CHECK(op.kernel_matrix.asymmetry() == 0.0);
  CHECK(op.spectrum_lo > -1e-10);
  CHECK(op.spectrum_hi < 1.0);
  CHECK(std::abs(op.nodes.front()) < 10.0);
  CHECK_THROWS_AS(build_nystrom(0.0, 1.0, 4), DomainError);
  CHECK_THROWS_AS(build_nystrom(0.0, 1.0, 40, -1.0), DomainError);
}

TEST_CASE("finite-temperature determinant") {
  CHECK(std::abs(fredholm_det_ft(0.0, 1.0, 40) - fredholm_det_ft(0.0, 1.0, 80)) < 1e-8);
  const double d = fredholm_det_ft(0.0, 1.0, 80);
  CHECK(d > 0.0);
  CHECK(d < 1.0);
  double prev = 1.0;
  for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    const double v = fredholm_det_ft(s, 1.0, 80);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("finite-temperature determinant far in the tail") {
  // 1 - det decays only like e^{s} at finite T (the Fermi factor's
  // exponential tail), with constant int e^w Ai(w)^2 dw = e^{1/12}/(2 sqrt(pi)).
  const double c = std::exp(1.0 / 12.0) / (2.0 * std::sqrt(std::numbers::pi));
  const double gap = 1.0 - fredholm_det_ft(-12.0, 1.0, 80);
  CHECK(std::abs(gap / (c * std::exp(-12.0)) - 1.0) < 0.02);
  CHECK(std::abs(fredholm_det_ft(-25.0, 1.0, 80) - 1.0) < 1e-9);
}

TEST_CASE("classical Airy determinant") {
  const double d40 = fredholm_det_airy(0.0, 40), d80 = fredholm_det_airy(0.0, 80), d160 = fredholm_det_airy(0.0, 160);
  CHECK(std::abs(d40 - d80) < 1e-8);
  CHECK(std::abs(d80 - d160) < 1e-8);
  CHECK(std::abs(d80 - 0.96937) < 1e-5);
  CHECK(std::abs(fredholm_det_airy(-8.0, 80) - 1.0) < 1e-10);
  CHECK(std::abs(fredholm_det_ft(0.0, 4000.0, 80) - d80) <= 5e-3);
}

TEST_CASE("truncation length does not matter") {
  for (double s : {-1.0, 1.0}) {
    const double ref = fredholm_det_ft(s, 1.0, 80, 10.0);
    CHECK(std::abs(fredholm_det_ft(s, 1.0, 80, 5.0) - ref) < 1e-8);
    CHECK(std::abs(fredholm_det_ft(s, 1.0, 80, 20.0) - ref) < 1e-8);
  }
}

}
