#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftlab/errors.hpp"
#include "ftlab/idpii/kernel.hpp"
#include "ftlab/idpii/solver.hpp"
#include "ftlab/idpii/tracy_widom.hpp"
#include "ftlab/special/airy.hpp"

using namespace ftlab;

namespace {

const IdPiiSolution& base() {
  static const IdPiiSolution sol = solve_idpii();
  return sol;
}

}  // namespace

TEST_SUITE("idpii") {

TEST_CASE("Simpson weights") {
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u, 11u, 12u}) {
    const double h = 1.0 / static_cast<double>(n - 1);
    const auto w = simpson_weights(n, h);
    double s0 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s0 += w[i];
      s2 += w[i] * (h * i) * (h * i);
    }
    CHECK(std::abs(s0 - 1.0) < 1e-14);
    if (n >= 3) CHECK(std::abs(s2 - 1.0 / 3.0) < 1e-14);
  }
  CHECK_THROWS_AS(simpson_weights(1, 0.1), DomainError);
}

TEST_CASE("range guards") {
  IdPiiOptions o;
  o.s_max = 6.0;
  CHECK_THROWS_AS(solve_idpii(o), DomainError);
  o = {};
  o.temperature = 20.0;
  CHECK_THROWS_AS(solve_idpii(o), DomainError);
  o = {};
  o.h_xi = 0.1;
  CHECK_THROWS_AS(solve_idpii(o), DomainError);
}

TEST_CASE("initial data") {
  const auto& sol = base();
  CHECK(sol.s_grid.front() == 12.0);
  CHECK(sol.s_grid.back() == -2.0);
  const std::size_t i0 = 750;  // xi = 0
  CHECK(std::abs(sol.xi_grid[i0]) < 1e-12);
  CHECK(sol.phi[0][i0] == airy_ai(12.0));
  CHECK(sol.dphi[0][i0] == airy_ai_prime(12.0));
  CHECK(sol.p_of_s[0] == 36.0);
}

TEST_CASE("solution quality at T = 1") {
  const auto& sol = base();
  CHECK(idpii_ode_residual(sol) <= 5e-4);
  CHECK_FALSE(sol.truncation_flagged);
  for (double v : sol.i_of_s) CHECK(v >= 0.0);
  // I is decreasing in S: the Airy data moves out of the Fermi window.
  for (std::size_t j = 1; j < sol.layers(); ++j) CHECK(sol.i_of_s[j] > sol.i_of_s[j - 1]);
}

TEST_CASE("I(S) tail constant") {
  // For large S, Phi is close to Ai(xi + S) and I(S) ~ e^{-S} int e^w Ai(w)^2 dw.
  IdPiiOptions o;
  o.s_max = 10.0;
  o.steps = 2400;
  const auto sol = solve_idpii(o);
  const double c = std::exp(1.0 / 12.0) / (2.0 * std::sqrt(std::numbers::pi));
  CHECK(std::abs(sol.i_of_s[0] / (c * std::exp(-10.0)) - 1.0) < 0.01);
}

TEST_CASE("decay in xi beyond 8 for S >= 0") {
  const auto& sol = base();
  for (double s : {0.0, 2.0, 6.0}) {
    const auto& layer = sol.phi[sol.nearest_layer(s)];
    for (std::size_t i = 0; i + 1 < layer.size(); ++i)
      if (sol.xi_grid[i] > 8.0) CHECK(std::abs(layer[i + 1]) < std::abs(layer[i]));
  }
}

TEST_CASE("step doubling") {
  IdPiiOptions o;
  o.steps = 5600;
  const auto fine = solve_idpii(o);
  for (double xi : {-10.0, -3.0, 0.0, 4.0}) CHECK(std::abs(interp_phi(base(), xi, 0.0).phi - interp_phi(fine, xi, 0.0).phi) < 1e-6);
}

TEST_CASE("interpolation") {
  const auto& sol = base();
  const std::size_t j = sol.nearest_layer(1.0);
  const auto at = interp_phi(sol, sol.xi_grid[700], sol.s_grid[j]);
  CHECK(at.phi == doctest::Approx(sol.phi[j][700]).epsilon(1e-14));
  CHECK(at.dphi == doctest::Approx(sol.dphi[j][700]).epsilon(1e-14));

  // Midpoints in S against a run whose grid contains them.
  IdPiiOptions o;
  o.steps = 5600;
  const auto fine = solve_idpii(o);
  for (std::size_t k : {100u, 1000u, 2500u}) {
    const double s_mid = 0.5 * (sol.s_grid[k] + sol.s_grid[k + 1]);
    const std::size_t jf = fine.nearest_layer(s_mid);
    CHECK(std::abs(fine.s_grid[jf] - s_mid) < 1e-12);
    for (std::size_t i : {300u, 750u, 900u}) CHECK(std::abs(interp_phi(sol, sol.xi_grid[i], s_mid).phi - fine.phi[jf][i]) < 1e-6);
  }
  // Midpoints in xi against a run with half the spacing.
  IdPiiOptions oh;
  oh.h_xi = 0.02;
  const auto half = solve_idpii(oh);
  for (std::size_t i : {301u, 751u, 1001u}) {
    const std::size_t jh = half.nearest_layer(0.5);
    CHECK(std::abs(interp_phi(sol, half.xi_grid[i], 0.5).phi - half.phi[jh][i]) < 1e-6);
  }
  CHECK_THROWS_AS(interp_phi(sol, 100.0, 0.0), DomainError);
}

TEST_CASE("limiting kernel") {
  const auto& sol = base();
  CHECK(k_infinity(sol, 0.3, 1.1, 0.0, 1.0) == doctest::Approx(k_infinity(sol, 1.1, 0.3, 0.0, 1.0)).epsilon(1e-14));
  const double diag = k_infinity(sol, 0.0, 0.0, 0.0, 1.0);
  CHECK(std::isfinite(diag));
  CHECK(diag > 0.0);
  CHECK(std::abs(k_infinity(sol, 0.0, 1e-5, 0.0, 1.0) - diag) < 1e-6);
  CHECK_THROWS_AS(k_infinity(sol, 0.0, 0.0, 0.0, 0.5), DomainError);
}

TEST_CASE("second derivative of log L matches -I(S)/T") {
  const auto& sol = base();
  for (double s : {0.0, 1.0, 3.0, 11.0}) {
    const auto stencil = tw_fredholm_stencil(s, 1.0, 80);
    CHECK(tw_local_check_unshifted(sol, s, stencil) <= (s > 10 ? 1e-3 : 2e-3));
    // The variant with the extra S/2 is off by exactly that term.
    CHECK(std::abs(tw_local_check(sol, s, stencil) - s / 2.0) < 2e-3);
  }
}

TEST_CASE("windowed integral") {
  const auto& sol = base();
  CHECK(tw_windowed_integral(sol, 8.0, 8.0) == 0.0);
  // The unshifted window integrates to log L itself (tail beyond 12 is ~1e-6).
  for (double s : {0.0, 1.0}) {
    const double log_l = tw_fredholm_stencil(s, 1.0, 80)[2];
    CHECK(std::abs(tw_windowed_integral(sol, s, 12.0, false) - log_l) < 1e-4);
  }
  CHECK(tw_windowed_integral(sol, -1.0, 8.0, false) < 0.0);
  // The two variants differ by (1/2T) int_S^{S_cut} (v - S) v dv, up to the
  // trapezoid error w h^2/12 on that quadratic.
  const double s = -1.0, cut = 8.0, w = cut - s;
  const double extra = 0.5 * (w * w * w / 3.0 + s * w * w / 2.0);
  CHECK(std::abs(tw_windowed_integral(sol, s, cut) - tw_windowed_integral(sol, s, cut, false) - extra) < 2e-5);
  IdPiiOptions o;
  o.steps = 5600;
  const auto fine = solve_idpii(o);
  CHECK(std::abs(tw_windowed_integral(sol, -1.0, 8.0) - tw_windowed_integral(fine, -1.0, 8.0)) < 1e-4);
}

}
