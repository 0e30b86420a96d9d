// Acceptance suite: one PASS/FAIL line per criterion, indented details below.
// Exit status is the number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ftlab/ensemble/model.hpp"
#include "ftlab/equilibrium/szego.hpp"
#include "ftlab/fredholm/nystrom.hpp"
#include "ftlab/idpii/kernel.hpp"
#include "ftlab/idpii/solver.hpp"
#include "ftlab/idpii/tracy_widom.hpp"
#include "ftlab/lab/studies.hpp"
#include "ftlab/special/airy.hpp"
#include "ftlab/special/fermi.hpp"

using namespace ftlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Potential kGue{Polynomial{0.0, 0.0, 2.0}};
const Potential kQuartic{Polynomial{0.0, 0.0, 0.5, 0.0, 0.05}};

const EquilibriumMeasure& gue() {
  static const EquilibriumMeasure eq = EquilibriumMeasure::build(kGue);
  return eq;
}
const EquilibriumMeasure& quartic() {
  static const EquilibriumMeasure eq = EquilibriumMeasure::build(kQuartic);
  return eq;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

Outcome trace_identity() {
  Outcome o;
  double worst = 0.0;
  for (int n : {5, 10, 20})
    for (double s : {0.0, 2.0}) {
      const EnsembleModel m(gue(), DeformationQ::linear(1.0), n);
      const double rel = std::abs(m.trace_integral(s) - n) / n;
      worst = std::max(worst, rel);
      o.details.push_back(fmt("n=%d s=%g |tr-n|/n=%.2e", n, s, rel));
    }
  o.pass = worst <= 1e-8;
  o.summary = fmt("max |int K w - n|/n = %.2e (tol 1e-8)", worst);
  return o;
}

Outcome route_agreement() {
  Outcome o;
  double worst = 0.0;
  for (const auto* eq : {&gue(), &quartic()})
    for (int n : {8, 16, 32}) {
      const EnsembleModel m(*eq, DeformationQ::linear(1.0), n);
      for (double s : {-1.0, 0.0, 1.0}) {
        const double g = m.log_lstat_gamma(s);
        const double d = m.log_lstat_det(s);
        const double rel = std::abs(g - d) / (1.0 + std::abs(g));
        worst = std::max(worst, rel);
        o.details.push_back(fmt("%s n=%d s=%g logL=%.12f gap=%.2e", eq == &gue() ? "gue" : "quartic", n, s, g, rel));
      }
    }
  o.pass = worst <= 1e-6;
  o.summary = fmt("max |gamma - det|/(1+|log L|) = %.2e over 2 potentials x 3 n x 3 s (tol 1e-6)", worst);
  return o;
}

Outcome n1_oracle() {
  Outcome o;
  double worst = 0.0;
  for (const auto* eq : {&gue(), &quartic()})
    for (double s : {-1.0, 0.0, 2.0}) {
      const auto q = DeformationQ::linear(1.0);
      const EnsembleModel m(*eq, q, 1);
      const double direct = lstat_n1_direct(eq->shifted_potential(), q, s);
      worst = std::max({worst, std::abs(std::exp(m.log_lstat_gamma(s)) - direct),
                        std::abs(std::exp(m.log_lstat_det(s)) - direct)});
    }
  o.pass = worst <= 1e-8;
  o.summary = fmt("max |L_1 - direct quadrature| = %.2e (tol 1e-8)", worst);
  return o;
}

Outcome theorem1() {
  Outcome o;
  const auto& eq = gue();
  const auto q = DeformationQ::linear(1.0);
  const double tp = 1.0 / eq.c_v();
  std::vector<double> slopes;
  for (double s : {0.0, 1.0}) {
    const double target = fredholm_logdet(build_nystrom(-s / tp, tp * tp * tp, 120));
    std::vector<double> ns, errs;
    for (int n : {16, 32, 64}) {
      const EnsembleModel m(eq, q, n);
      ns.push_back(n);
      errs.push_back(std::abs(m.log_lstat_gamma(s) - target));
    }
    const double slope = lab::loglog_slope(ns, errs);
    const bool ok = strictly_decreasing(errs) && slope <= -0.3;
    o.pass = o.pass && ok;
    slopes.push_back(slope);
    o.details.push_back(fmt("s=%g target=%.10f e_n=%.3e %.3e %.3e slope=%.3f", s, target, errs[0], errs[1], errs[2], slope));
  }
  o.summary = fmt("errors strictly decreasing, slopes %.3f / %.3f (need <= -0.3)", slopes[0], slopes[1]);
  return o;
}

Outcome theorem2() {
  Outcome o;
  const auto& eq = gue();
  const auto q = DeformationQ::linear(1.0);
  const double tp = 1.0 / eq.c_v();
  IdPiiOptions opts;
  opts.temperature = std::pow(tp, -1.5);
  const auto sol = solve_idpii(opts);
  std::vector<double> ns, sups;
  for (int n : {16, 32, 64}) {
    const EnsembleModel m(eq, q, n);
    const auto t = m.deformed(0.0);
    double sup = 0.0;
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        sup = std::max(sup, std::abs(m.rescaled_edge_kernel(t, i, j) - k_infinity(sol, i, j, 0.0, tp)));
    ns.push_back(n);
    sups.push_back(sup);
  }
  const double slope = lab::loglog_slope(ns, sups);
  o.pass = strictly_decreasing(sups) && slope <= -0.2;
  o.summary = fmt("sup errors %.3e %.3e %.3e, slope %.3f (need decreasing, <= -0.2)", sups[0], sups[1], sups[2], slope);
  return o;
}

Outcome theorem3() {
  Outcome o;
  const auto& eq = gue();
  const auto q1 = DeformationQ::linear(1.0);
  const DeformationQ q2(Polynomial{0.0, -1.0, 0.0, -0.1});
  std::vector<double> gaps;
  double rho64 = 0.0;
  for (int n : {16, 32, 64}) {
    const EnsembleModel m1(eq, q1, n), m2(eq, q2, n);
    const double r1 = m1.norming_ratio(m1.deformed(0.0));
    const double r2 = m2.norming_ratio(m2.deformed(0.0));
    const double c = std::cbrt(static_cast<double>(n));
    gaps.push_back(std::abs(c * (0.5 - r1) - c * (0.5 - r2)));
    if (n == 64) rho64 = r1;
    o.details.push_back(fmt("n=%d rho(Q1)=%.6f rho(Q2)=%.6f |c(Q1)-c(Q2)|=%.3e", n, r1, r2, gaps.back()));
  }
  o.pass = std::abs(rho64 - 0.5) <= 0.1 && strictly_decreasing(gaps);
  o.summary = fmt("|rho_64 - 1/2| = %.4f (tol 0.1); Q-gap %.2e -> %.2e -> %.2e", std::abs(rho64 - 0.5), gaps[0], gaps[1],
                  gaps[2]);
  return o;
}

Outcome fredholm_self_convergence() {
  Outcome o;
  double worst = 0.0;
  bool bounded = true, monotone = true;
  for (double t : {0.125, 1.0, 8.0}) {
    double prev = 2.0;
    for (double s : {-1.0, 0.0, 1.0}) {
      const double d40 = fredholm_det_ft(s, t, 40);
      const double d80 = fredholm_det_ft(s, t, 80);
      const double diff = std::abs(d40 - d80);
      worst = std::max(worst, diff);
      bounded = bounded && d80 > 0.0 && d80 <= 1.0;
      monotone = monotone && d80 < prev;
      prev = d80;
      o.details.push_back(fmt("T=%g s=%g det=%.12f |m40-m80|=%.2e%s", t, s, d80, diff, diff < 1e-8 ? "" : "  <-- over tol"));
    }
  }
  o.pass = worst < 1e-8 && bounded && monotone;
  o.summary = fmt("max |det(m=40) - det(m=80)| = %.2e (tol 1e-8); in (0,1]: %s; decreasing in s: %s", worst,
                  bounded ? "yes" : "no", monotone ? "yes" : "no");
  return o;
}

Outcome classical_limit() {
  Outcome o;
  const double ft = fredholm_det_ft(0.0, 4000.0, 80);
  const double a80 = fredholm_det_airy(0.0, 80);
  const double a160 = fredholm_det_airy(0.0, 160);
  o.pass = std::abs(ft - a80) <= 5e-3 && std::abs(a160 - a80) <= 1e-8;
  o.summary = fmt("|det_T=4000 - det_Ai| = %.2e (tol 5e-3); det_Ai(0) = %.12f, m-doubling change %.1e (tol 1e-8)",
                  std::abs(ft - a80), a80, std::abs(a160 - a80));
  return o;
}

Outcome tracy_widom_local() {
  Outcome o;
  const auto sol = solve_idpii();
  double worst = 0.0;
  for (double s : {0.0, 1.0, 2.0, 3.0}) {
    const auto stencil = tw_fredholm_stencil(s, 1.0, 80);
    const double r = tw_local_check(sol, s, stencil);
    const double ru = tw_local_check_unshifted(sol, s, stencil);
    worst = std::max(worst, r);
    o.details.push_back(fmt("S=%g residual=%.3e  D2 logL=%.8f  -I(S)=%.8f  residual without S/2 term=%.2e", s, r,
                            second_difference(stencil, 0.05), -interp_i(sol, s), ru));
  }
  o.pass = worst <= 2e-3;
  o.summary = fmt("max |D2 log L + (I(S) - S/2)/T| = %.3e at T=1, S in {0,1,2,3} (tol 2e-3)", worst);
  return o;
}

Outcome polylog_identity() {
  Outcome o;
  double worst = 0.0;
  for (int k : {1, 2, 3})
    for (double y : {0.0, 0.5, 2.0, 5.0}) worst = std::max(worst, std::abs(f_beta_quad(k, y) - f_k_closed(k, y)));
  const double f0 = std::abs(f_beta_quad(0.0, 0.0) - std::numbers::pi * std::numbers::pi / 12.0);
  o.pass = worst <= 1e-10 && f0 <= 1e-12;
  o.summary = fmt("max |quadrature - polylog| = %.2e (tol 1e-10); |F_0(0) - pi^2/12| = %.1e (tol 1e-12)", worst, f0);
  return o;
}

Outcome szego_ratio() {
  Outcome o;
  const auto q = DeformationQ::linear(1.0);
  const double lim = q0_limit(0.0, 1.0, gue().a());
  const double r64 = std::cbrt(64.0) * szego_q0(gue(), q, 64, 0.0) / lim;
  const double r256 = std::cbrt(256.0) * szego_q0(gue(), q, 256, 0.0) / lim;
  o.pass = r64 >= 0.85 && r64 <= 1.15 && r256 >= 0.93 && r256 <= 1.07;
  o.summary = fmt("n^{1/3} q0 / limit = %.5f at n=64 (band 0.85-1.15), %.5f at n=256 (band 0.93-1.07)", r64, r256);
  return o;
}

Outcome equilibrium_closed_forms() {
  Outcome o;
  const auto e = solve_support(kGue);
  const double ends = std::max(std::abs(e.b_minus + 1.0), std::abs(e.b_plus - 1.0));
  const double cv = std::abs(gue().c_v() - 2.0);
  const double mass = std::max(std::abs(gue().mass() - 1.0), std::abs(quartic().mass() - 1.0));
  double inside = 0.0, outside = 1e300;
  for (const auto* eq : {&gue(), &quartic()}) {
    for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) inside = std::max(inside, std::abs(eq->el_residual(-eq->a() * f)));
    for (double x : {0.5, 1.0, -eq->a() - 0.5, -eq->a() - 1.0}) outside = std::min(outside, eq->el_residual(x));
  }
  o.pass = ends <= 1e-10 && cv <= 1e-8 && mass <= 1e-10 && inside <= 1e-8 && outside > 0.0;
  o.summary = fmt("endpoints err %.1e, |c_V - 2| %.1e, |mass - 1| %.1e, |EL| on support %.1e, min EL off support %.3f",
                  ends, cv, mass, inside, outside);
  return o;
}

Outcome idpii_internal() {
  Outcome o;
  const auto sol = solve_idpii();
  IdPiiOptions fine_opts;
  fine_opts.steps *= 2;
  const auto fine = solve_idpii(fine_opts);
  const double res = idpii_ode_residual(sol);
  double doubling = 0.0;
  for (double xi : {-10.0, -5.0, 0.0, 5.0})
    for (double s : {-2.0, 0.0, 4.0})
      doubling = std::max(doubling, std::abs(interp_phi(sol, xi, s).phi - interp_phi(fine, xi, s).phi));
  const double min_i = *std::min_element(sol.i_of_s.begin(), sol.i_of_s.end());
  double init = 0.0;
  for (std::size_t i = 0; i < sol.xi_grid.size(); ++i)
    init = std::max(init, std::abs(sol.phi[0][i] - airy_or_zero(sol.xi_grid[i] + 12.0).ai));
  o.pass = res <= 5e-4 && doubling <= 1e-6 && min_i >= 0.0 && init == 0.0;
  o.summary = fmt("ODE residual %.2e (tol 5e-4), step doubling %.1e (tol 1e-6), min I %.2e, initial data error %.0e",
                  res, doubling, min_i, init);
  return o;
}

struct Criterion {
  const char* name;
  double time_limit;  // seconds, 0 when unconstrained
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"trace identity", 60, trace_identity},
      {"route agreement", 300, route_agreement},
      {"n = 1 oracle", 0, n1_oracle},
      {"gap probability error decay", 600, theorem1},
      {"edge kernel convergence", 600, theorem2},
      {"norming constant asymptotics", 600, theorem3},
      {"fredholm self-convergence", 60, fredholm_self_convergence},
      {"finite-temperature to classical", 0, classical_limit},
      {"id-PII vs fredholm local check", 300, tracy_widom_local},
      {"polylog identity", 0, polylog_identity},
      {"szego constant", 0, szego_ratio},
      {"equilibrium closed forms", 0, equilibrium_closed_forms},
      {"id-PII internal", 0, idpii_internal},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      o.summary += fmt(" [over time limit %.0f s]", c.time_limit);
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s C%02zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.summary.c_str(), secs);
    if (!o.pass)
      for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
