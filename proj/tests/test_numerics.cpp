#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ftlab/errors.hpp"
#include "ftlab/numerics/linalg.hpp"
#include "ftlab/numerics/ode.hpp"
#include "ftlab/numerics/polynomial.hpp"
#include "ftlab/numerics/quadrature.hpp"

using namespace ftlab;
using doctest::Approx;

TEST_SUITE("numerics") {

TEST_CASE("polynomial evaluation") {
  CHECK(Polynomial({1.0})(123.4) == 1.0);
  CHECK(Polynomial({0.0, 1.0})(3.5) == 3.5);
  CHECK(Polynomial({1.0, 2.0, 3.0})(2.0) == 17.0);
  CHECK(Polynomial({1.0, 0.0, 0.0}).degree() == 0);
  CHECK(Polynomial{}.is_zero());
}

TEST_CASE("polynomial calculus and shifts") {
  const Polynomial p{1.0, -2.0, 0.5, 3.0};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng);
    const double c = u(rng);
    CHECK(p.shifted(c)(x) == Approx(p(x + c)).epsilon(1e-12));
    CHECK(p.antiderivative().derivative()(x) == Approx(p(x)).epsilon(1e-13));
    CHECK((p * p)(x) == Approx(p(x) * p(x)).epsilon(1e-12));
    CHECK((p - p)(x) == 0.0);
  }
  CHECK(p.antiderivative()(0.0) == 0.0);
}

TEST_CASE("gauss-legendre small rules") {
  const auto r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == Approx(0.0));
  CHECK(r1.weights[0] == Approx(2.0));
  const auto r2 = gauss_legendre(2);
  CHECK(std::abs(std::abs(r2.nodes[0]) - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(r2.weights[0] == Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == Approx(1.0).epsilon(1e-15));
  double sum = 0.0;
  for (double w : gauss_legendre(16).weights) sum += w;
  CHECK(std::abs(sum - 2.0) < 1e-14);
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("gauss-legendre exactness up to degree 2m-1") {
  for (int m : {3, 7, 20, 64}) {
    const auto r = gauss_legendre(m);
    for (int k = 0; k <= 2 * m - 1; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
}

TEST_CASE("composite integration") {
  const auto unit = PanelScheme::uniform(0.0, 1.0, 1, 8);
  CHECK(std::abs(integrate_panels([](double x) { return x * x; }, unit) - 1.0 / 3.0) < 1e-14);
  const auto half_period = PanelScheme::uniform(0.0, std::numbers::pi, 4, 16);
  CHECK(std::abs(integrate_panels([](double x) { return std::sin(x); }, half_period) - 2.0) < 1e-12);
  const auto gauss = PanelScheme::uniform(-8.0, 8.0, 16, 16);
  CHECK(std::abs(integrate_panels([](double x) { return std::exp(-x * x); }, gauss) - std::sqrt(std::numbers::pi)) <
        1e-12);
  CHECK_THROWS_AS(integrate_panels([](double x) { return x > 0.0 ? std::log(-x) : 1.0; }, PanelScheme({-1.0, 0.0, 1.0}, 1)),
                  EvaluationError);
}

TEST_CASE("graded breakpoints resolve an endpoint singularity") {
  const auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const PanelScheme s(graded_breakpoints(0.0, 1.0, 40), 16);
  CHECK(std::abs(integrate_panels(f, s) - 2.0) < 1e-7);
  CHECK(std::abs(integrate_panels(f, PanelScheme::uniform(0.0, 1.0, 40, 16)) - 2.0) > 1e-3);
  CHECK(s.refined().panel_count() == 2 * s.panel_count());
}

TEST_CASE("semi-infinite map") {
  const auto m = map_semi_infinite(3.0, 10.0);
  CHECK(m.transform(0.0) == Approx(-3.0));
  CHECK(m.transform(0.5) == Approx(7.0));
  CHECK(m.jacobian(0.5) == Approx(40.0));
}

TEST_CASE("lu_logdet") {
  const LogDet id = lu_logdet(SquareMatrix::identity(5));
  CHECK(id.sign == 1);
  CHECK(id.log_abs_det == 0.0);
  const LogDet d = lu_logdet(SquareMatrix(2, {2.0, 0.0, 0.0, 3.0}));
  CHECK(d.sign == 1);
  CHECK(d.log_abs_det == Approx(std::log(6.0)));
  const LogDet p = lu_logdet(SquareMatrix(2, {0.0, 1.0, 1.0, 0.0}));
  CHECK(p.sign == -1);
  CHECK(std::abs(p.log_abs_det) < 1e-15);
}

TEST_CASE("lu_logdet is multiplicative") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    SquareMatrix a(6), b(6);
    for (double& x : a.data()) x = g(rng);
    for (double& x : b.data()) x = g(rng);
    const LogDet da = lu_logdet(a), db = lu_logdet(b), dab = lu_logdet(a * b);
    CHECK(dab.sign == da.sign * db.sign);
    CHECK(dab.log_abs_det == Approx(da.log_abs_det + db.log_abs_det).epsilon(1e-10));
  }
}

TEST_CASE("spectral bounds lie inside the Gershgorin enclosure") {
  SquareMatrix a(3, {2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0});
  const auto exact = symmetric_spectrum_bounds(a);
  CHECK(exact.lo == Approx(2.0 - std::sqrt(2.0)));
  CHECK(exact.hi == Approx(2.0 + std::sqrt(2.0)));
  const auto g = gershgorin_bounds(a);
  CHECK(g.lo <= exact.lo);
  CHECK(g.hi >= exact.hi);
}

TEST_CASE("rk4 closed forms") {
  const OdeRhs growth = [](double, std::span<const double> y, std::span<double> dy) { dy[0] = y[0]; };
  const auto tr = ode_rk4(growth, {1.0}, 0.0, 1.0, 100);
  CHECK(std::abs(tr.states.back()[0] - std::numbers::e) < 1e-8);
  CHECK(tr.times.size() == 101);

  const OdeRhs frozen = [](double, std::span<const double>, std::span<double> dy) { dy[0] = 0.0; };
  for (const auto& s : ode_rk4(frozen, {4.2}, 0.0, 3.0, 10).states) CHECK(s[0] == 4.2);

  const OdeRhs osc = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  CHECK(std::abs(ode_rk4(osc, {0.0, 1.0}, 0.0, std::numbers::pi / 2, 200).states.back()[0] - 1.0) < 1e-8);
  // Integrating backwards undoes the forward march.
  const auto fwd = ode_rk4(osc, {0.3, -0.2}, 0.0, 2.0, 400).states.back();
  const auto back = ode_rk4(osc, fwd, 2.0, 0.0, 400).states.back();
  CHECK(std::abs(back[0] - 0.3) < 1e-9);
}

TEST_CASE("rk4 reports blow-up with the step index") {
  const OdeRhs blow = [](double, std::span<const double> y, std::span<double> dy) { dy[0] = y[0] * y[0]; };
  try {
    ode_rk4(blow, {1.0}, 0.0, 2.0, 50);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    CHECK(e.step() > 0);
    CHECK(e.last_valid_time() < 2.0);
  }
}

}
