#include "ftlab/lab/studies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>

#include "ftlab/ensemble/model.hpp"
#include "ftlab/equilibrium/szego.hpp"
#include "ftlab/fredholm/nystrom.hpp"
#include "ftlab/idpii/kernel.hpp"
#include "ftlab/idpii/solver.hpp"
#include "ftlab/idpii/tracy_widom.hpp"
#include "ftlab/lab/worker_pool.hpp"
#include "ftlab/special/airy.hpp"
#include "ftlab/special/fermi.hpp"

namespace ftlab::lab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Task {
  std::string study;
  KeyValues params;
  std::function<void(ResultRecord&)> fill;
};

std::vector<ResultRecord> run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<ResultRecord> out(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    ResultRecord& r = out[i];
    r.study = tasks[i].study;
    r.params = tasks[i].params;
    try {
      tasks[i].fill(r);
    } catch (const std::exception& e) {
      r.value = kNaN;
      r.aux.clear();
      r.verdict = Verdict::error;
      r.note = e.what();
    }
  });
  return out;
}

ResultRecord error_record(std::string study, const std::exception& e) {
  ResultRecord r;
  r.study = std::move(study);
  r.value = kNaN;
  r.verdict = Verdict::error;
  r.note = e.what();
  return r;
}

std::vector<ResultRecord> finalize(std::vector<ResultRecord> records, const LabConfig& cfg) {
  const std::string hash = config_hash(cfg);
  for (auto& r : records) {
    r.config_hash = hash;
    r.timestamp = cfg.timestamp;
  }
  sort_records(records);
  return records;
}

Verdict check(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

double aux_value(const ResultRecord& r, std::string_view key) {
  for (const auto& [k, v] : r.aux)
    if (k == key) return v;
  return kNaN;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

EquilibriumMeasure build_equilibrium(const LabConfig& cfg) {
  return EquilibriumMeasure::build(Potential(Polynomial(cfg.potential)));
}

DeformationQ deformation(const LabConfig& cfg, std::size_t k) { return DeformationQ(Polynomial(cfg.deformations.at(k))); }

IdPiiOptions idpii_options(const LabConfig& cfg, double temperature) {
  IdPiiOptions o;
  o.temperature = temperature;
  o.s_min = cfg.idpii.s_min;
  o.s_max = cfg.idpii.s_max;
  o.xi_lo = cfg.idpii.xi_lo;
  o.xi_hi = cfg.idpii.xi_hi;
  o.h_xi = cfg.idpii.h_xi;
  o.steps = cfg.idpii.steps;
  return o;
}

// Linear interpolation of a per-layer quantity (s_grid is descending).
double layer_interp(const IdPiiSolution& sol, const std::vector<double>& f, double s) {
  if (s > sol.s_grid.front() + 1e-12 || s < sol.s_grid.back() - 1e-12)
    throw DomainError("layer_interp: S outside the solved range");
  const double pos = std::clamp((sol.s_grid.front() - s) / sol.s_step(), 0.0, static_cast<double>(sol.layers() - 1));
  const auto j = std::min(static_cast<std::size_t>(pos), sol.layers() - 2);
  const double frac = pos - static_cast<double>(j);
  return (1.0 - frac) * f[j] + frac * f[j + 1];
}

// Emits one summary record per s from per-n error records.
void slope_summaries(std::vector<ResultRecord>& records, const std::string& point_study, const std::string& summary,
                     const std::string& error_key, const std::vector<double>& s_list, double slope_bound) {
  for (double s : s_list) {
    std::vector<double> ns;
    std::vector<double> errs;
    bool broken = false;
    for (const auto& r : records) {
      if (r.study != point_study || r.params.size() < 2 || r.params[1].second != s) continue;
      if (r.verdict == Verdict::error) broken = true;
      ns.push_back(r.params[0].second);
      errs.push_back(aux_value(r, error_key));
    }
    ResultRecord out;
    out.study = summary;
    out.params = {{"s", s}};
    if (broken || ns.size() < 2) {
      out.value = kNaN;
      out.verdict = broken ? Verdict::error : Verdict::info;
      out.note = broken ? "a parameter point failed" : "need at least two n values";
      records.push_back(std::move(out));
      continue;
    }
    const bool negligible = *std::max_element(errs.begin(), errs.end()) < 1e-10;
    const bool decreasing = strictly_decreasing(errs);
    out.value = negligible ? kNaN : loglog_slope(ns, errs);
    out.aux = {{"decreasing", decreasing ? 1.0 : 0.0}, {"first_error", errs.front()}, {"last_error", errs.back()}};
    if (negligible) {
      out.verdict = Verdict::info;
      out.note = "errors below 1e-10 at every n";
    } else {
      out.verdict = check(decreasing && out.value <= slope_bound);
    }
    records.push_back(std::move(out));
  }
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw DomainError("loglog_slope: need at least two matched points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

std::vector<ResultRecord> run_theorem1(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  try {
    const EquilibriumMeasure eq = build_equilibrium(cfg);
    const DeformationQ q = deformation(cfg, 0);
    const double tp = q.t() / eq.c_v();
    const double temp = tp * tp * tp;

    std::vector<double> targets(cfg.s_list.size(), kNaN);
    std::vector<std::string> target_errors(cfg.s_list.size());
    parallel_for(cfg.s_list.size(), cfg.workers, [&](std::size_t i) {
      try {
        targets[i] = fredholm_logdet(build_nystrom(-cfg.s_list[i] / tp, temp, cfg.fredholm.m, cfg.fredholm.scale));
      } catch (const std::exception& e) {
        target_errors[i] = e.what();
      }
    });

    std::vector<Task> tasks;
    for (int n : cfg.n_list)
      for (std::size_t i = 0; i < cfg.s_list.size(); ++i) {
        const double s = cfg.s_list[i];
        tasks.push_back({"theorem1", {{"n", n}, {"s", s}}, [&, n, s, i](ResultRecord& r) {
                           if (!target_errors[i].empty()) throw InconsistencyError(target_errors[i]);
                           const EnsembleModel model(eq, q, n);
                           const double g = model.log_lstat_gamma(s);
                           const double d = model.log_lstat_det(s);
                           const double gap = std::abs(g - d);
                           r.value = g;
                           r.aux = {{"log_l_det", d},
                                    {"route_gap", gap},
                                    {"target", targets[i]},
                                    {"error", std::abs(g - targets[i])}};
                           r.verdict = check(gap <= 1e-6 * (1.0 + std::abs(g)));
                         }});
      }
    records = run_tasks(tasks, cfg.workers);
    slope_summaries(records, "theorem1", "theorem1_slope", "error", cfg.s_list, -0.3);
  } catch (const std::exception& e) {
    records.push_back(error_record("theorem1", e));
  }
  return finalize(std::move(records), cfg);
}

std::vector<ResultRecord> run_theorem2(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  try {
    const EquilibriumMeasure eq = build_equilibrium(cfg);
    const DeformationQ q = deformation(cfg, 0);
    const double tp = q.t() / eq.c_v();
    const IdPiiSolution sol = solve_idpii(idpii_options(cfg, std::pow(tp, -1.5)));

    std::vector<Task> tasks;
    for (int n : cfg.n_list)
      for (double s : cfg.s_list)
        tasks.push_back({"theorem2", {{"n", n}, {"s", s}}, [&, n, s](ResultRecord& r) {
                           const EnsembleModel model(eq, q, n);
                           const RecurrenceTable table = model.deformed(s);
                           double sup = 0.0;
                           double asym = 0.0;
                           double min_diag = std::numeric_limits<double>::infinity();
                           for (int i = -2; i <= 2; ++i)
                             for (int j = -2; j <= 2; ++j) {
                               const double kn = model.rescaled_edge_kernel(table, i, j);
                               const double ki = k_infinity(sol, i, j, s, tp);
                               sup = std::max(sup, std::abs(kn - ki));
                               asym = std::max({asym, std::abs(kn - model.rescaled_edge_kernel(table, j, i)),
                                                std::abs(ki - k_infinity(sol, j, i, s, tp))});
                               if (i == j) min_diag = std::min({min_diag, kn, ki});
                             }
                           r.value = sup;
                           r.aux = {{"sup_error", sup}, {"asymmetry", asym}, {"min_diagonal", min_diag}};
                           r.verdict = check(min_diag > 0.0 && asym <= 1e-10);
                         }});
    records = run_tasks(tasks, cfg.workers);
    slope_summaries(records, "theorem2", "theorem2_slope", "sup_error", cfg.s_list, -0.2);
  } catch (const std::exception& e) {
    records.push_back(error_record("theorem2", e));
  }
  return finalize(std::move(records), cfg);
}

std::vector<ResultRecord> run_theorem3(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  try {
    const EquilibriumMeasure eq = build_equilibrium(cfg);
    std::vector<DeformationQ> qs;
    for (std::size_t k = 0; k < cfg.deformations.size(); ++k) qs.push_back(deformation(cfg, k));
    const double t = qs.front().t();

    std::vector<Task> tasks;
    for (int n : cfg.n_list)
      for (std::size_t k = 0; k < qs.size(); ++k)
        for (double s : cfg.s_list)
          tasks.push_back({"theorem3", {{"n", n}, {"q", static_cast<double>(k)}, {"s", s}}, [&, n, k, s](ResultRecord& r) {
                             const EnsembleModel model(eq, qs[k], n);
                             const double rho = model.norming_ratio(model.deformed(s));
                             r.value = std::cbrt(static_cast<double>(n)) * (0.5 - rho);
                             r.aux = {{"rho", rho}};
                             r.verdict = Verdict::info;
                           }});
    records = run_tasks(tasks, cfg.workers);

    std::map<std::tuple<int, std::size_t, double>, const ResultRecord*> by_point;
    for (const auto& r : records)
      by_point[{static_cast<int>(r.params[0].second), static_cast<std::size_t>(r.params[1].second),
                r.params[2].second}] = &r;
    const auto c_at = [&](int n, std::size_t k, double s) {
      const ResultRecord* r = by_point.at({n, k, s});
      return r->verdict == Verdict::error ? kNaN : r->value;
    };
    const auto rho_at = [&](int n, std::size_t k, double s) {
      const ResultRecord* r = by_point.at({n, k, s});
      return r->verdict == Verdict::error ? kNaN : aux_value(*r, "rho");
    };

    std::vector<ResultRecord> derived;
    for (double s : cfg.s_list) {
      std::vector<double> gaps;
      for (int n : cfg.n_list) {
        if (qs.size() < 2) break;
        ResultRecord u;
        u.study = "theorem3_universality";
        u.params = {{"n", n}, {"s", s}};
        u.value = std::abs(c_at(n, 0, s) - c_at(n, 1, s));
        u.verdict = std::isnan(u.value) ? Verdict::error : Verdict::info;
        gaps.push_back(u.value);
        derived.push_back(std::move(u));
      }
      ResultRecord sum;
      sum.study = "theorem3_summary";
      sum.params = {{"s", s}};
      const double rho_last = rho_at(cfg.n_list.back(), 0, s);
      sum.value = std::abs(rho_last - 0.5);
      const bool decreasing = qs.size() < 2 || strictly_decreasing(gaps);
      sum.aux = {{"rho_last", rho_last}, {"gap_decreasing", decreasing ? 1.0 : 0.0}};
      sum.verdict = std::isnan(rho_last) ? Verdict::error : check(sum.value <= 0.1 && decreasing);
      derived.push_back(std::move(sum));
    }

    // Differences in s at fixed n against the same differences of the
    // solution-derived coefficient, where the offset of P cancels.
    if (cfg.s_list.size() > 1) {
      const double temp = std::pow(t / eq.c_v(), -1.5);
      std::optional<IdPiiSolution> sol;
      std::string sol_error;
      try {
        sol = solve_idpii(idpii_options(cfg, temp));
      } catch (const std::exception& e) {
        sol_error = e.what();
      }
      const auto coefficient = [&](double s) {
        const double big_s = s * temp;
        return std::sqrt(eq.c_v() / t) * (layer_interp(*sol, sol->p_of_s, big_s) - big_s * big_s / (4.0 * temp));
      };
      const double s0 = cfg.s_list.front();
      for (int n : cfg.n_list)
        for (std::size_t i = 1; i < cfg.s_list.size(); ++i) {
          const double s = cfg.s_list[i];
          ResultRecord d;
          d.study = "theorem3_sdiff";
          d.params = {{"n", n}, {"s", s}};
          d.value = c_at(n, 0, s) - c_at(n, 0, s0);
          try {
            if (!sol) throw InconsistencyError(sol_error);
            const double predicted = coefficient(s) - coefficient(s0);
            d.aux = {{"predicted", predicted}, {"ratio", predicted / d.value}};
            d.verdict = std::isnan(d.value) ? Verdict::error : Verdict::info;
          } catch (const std::exception& e) {
            d.verdict = Verdict::error;
            d.note = e.what();
          }
          derived.push_back(std::move(d));
        }
    }
    records.insert(records.end(), derived.begin(), derived.end());
  } catch (const std::exception& e) {
    records.push_back(error_record("theorem3", e));
  }
  return finalize(std::move(records), cfg);
}

std::vector<ResultRecord> run_crosschecks(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  try {
    const EquilibriumMeasure eq = build_equilibrium(cfg);
    const DeformationQ q = deformation(cfg, 0);
    std::optional<IdPiiSolution> sol;
    std::string sol_error;
    try {
      sol = solve_idpii(idpii_options(cfg, 1.0));
    } catch (const std::exception& e) {
      sol_error = e.what();
    }

    std::vector<Task> tasks;
    for (int n : {5, 10, 20})
      for (double s : {0.0, 2.0})
        tasks.push_back({"trace", {{"n", n}, {"s", s}}, [&, n, s](ResultRecord& r) {
                           const EnsembleModel model(eq, q, n);
                           const double tr = model.trace_integral(s);
                           r.value = std::abs(tr - n) / n;
                           r.aux = {{"trace", tr}};
                           r.verdict = check(r.value <= 1e-8);
                         }});
    for (int n : cfg.n_list)
      for (double s : cfg.s_list)
        tasks.push_back({"routes", {{"n", n}, {"s", s}}, [&, n, s](ResultRecord& r) {
                           const EnsembleModel model(eq, q, n);
                           const double g = model.log_lstat_gamma(s);
                           const double d = model.log_lstat_det(s);
                           r.value = std::abs(g - d);
                           r.aux = {{"log_l_gamma", g}, {"log_l_det", d}};
                           r.verdict = check(r.value <= 1e-6 * (1.0 + std::abs(g)));
                         }});
    for (double s : cfg.s_list)
      tasks.push_back({"n1_oracle", {{"s", s}}, [&, s](ResultRecord& r) {
                         const EnsembleModel model(eq, q, 1);
                         const double direct = lstat_n1_direct(eq.shifted_potential(), q, s);
                         const double g = std::exp(model.log_lstat_gamma(s));
                         const double d = std::exp(model.log_lstat_det(s));
                         r.value = std::max(std::abs(g - direct), std::abs(d - direct));
                         r.aux = {{"direct", direct}, {"gamma_route", g}, {"det_route", d}};
                         r.verdict = check(r.value <= 1e-8);
                       }});
    for (int n : {64, 256})
      tasks.push_back({"q0_limit", {{"n", n}}, [&, n](ResultRecord& r) {
                         const double q0 = szego_q0(eq, q, n, 0.0);
                         const double lim = q0_limit(0.0, q.t(), eq.a());
                         r.value = std::cbrt(static_cast<double>(n)) * q0 / lim;
                         r.aux = {{"q0", q0}, {"limit", lim}};
                         const double band = n >= 256 ? 0.07 : 0.15;
                         r.verdict = check(std::abs(r.value - 1.0) <= band);
                       }});
    for (int k : {1, 2, 3})
      for (double y : {0.0, 0.5, 2.0, 5.0})
        tasks.push_back({"polylog", {{"k", k}, {"y", y}}, [k, y](ResultRecord& r) {
                           const double quad = f_beta_quad(k, y);
                           const double closed = f_k_closed(k, y);
                           r.value = std::abs(quad - closed);
                           r.aux = {{"quadrature", quad}, {"closed", closed}};
                           r.verdict = check(r.value <= 1e-10);
                         }});
    tasks.push_back({"polylog", {{"k", 0}, {"y", 0}}, [](ResultRecord& r) {
                       const double exact = std::numbers::pi * std::numbers::pi / 12.0;
                       const double quad = f_beta_quad(0.0, 0.0);
                       const double closed = f_k_closed(0, 0.0);
                       r.value = std::max(std::abs(quad - exact), std::abs(closed - exact));
                       r.aux = {{"quadrature", quad}, {"closed", closed}};
                       r.verdict = check(r.value <= 1e-12);
                     }});
    const int m = cfg.fredholm.m;
    for (double temp : cfg.fredholm.t_list)
      for (double s : {-1.0, 0.0, 1.0})
        tasks.push_back({"fredholm_self", {{"T", temp}, {"s", s}}, [&, temp, s](ResultRecord& r) {
                           const double full = fredholm_det_ft(s, temp, m, cfg.fredholm.scale);
                           const double half = fredholm_det_ft(s, temp, m / 2, cfg.fredholm.scale);
                           r.value = std::abs(full - half);
                           r.aux = {{"det", full}, {"det_half_m", half}};
                           r.verdict = check(r.value < 1e-8 && full > 0.0 && full <= 1.0);
                         }});
    tasks.push_back({"fredholm_classical_limit", {}, [&](ResultRecord& r) {
                       const double ft = fredholm_det_ft(0.0, 4000.0, m, cfg.fredholm.scale);
                       const double ai = fredholm_det_airy(0.0, m, cfg.fredholm.scale);
                       const double ai2 = fredholm_det_airy(0.0, 2 * m, cfg.fredholm.scale);
                       r.value = std::abs(ft - ai);
                       r.aux = {{"det_t4000", ft}, {"det_airy", ai}, {"airy_doubling", std::abs(ai2 - ai)}};
                       r.verdict = check(r.value <= 5e-3 && std::abs(ai2 - ai) <= 1e-8);
                     }});
    for (double big_s : {0.0, 1.0, 2.0, 3.0})
      tasks.push_back({"tw_local", {{"S", big_s}}, [&, big_s](ResultRecord& r) {
                         if (!sol) throw InconsistencyError(sol_error);
                         const auto stencil = tw_fredholm_stencil(big_s, 1.0, m, 0.05, cfg.fredholm.scale);
                         r.value = tw_local_check(*sol, big_s, stencil);
                         r.aux = {{"second_difference", second_difference(stencil, 0.05)},
                                  {"i_of_s", interp_i(*sol, big_s)},
                                  {"unshifted_residual", tw_local_check_unshifted(*sol, big_s, stencil)}};
                         r.verdict = check(r.value <= 2e-3);
                       }});
    records = run_tasks(tasks, cfg.workers);

    // det(I - K) on L^2(-s, inf) must decrease as the interval grows.
    for (double temp : cfg.fredholm.t_list) {
      std::vector<double> dets;
      bool broken = false;
      for (const auto& r : records)
        if (r.study == "fredholm_self" && r.params[0].second == temp) {
          broken = broken || r.verdict == Verdict::error;
          dets.push_back(aux_value(r, "det"));
        }
      ResultRecord mono;
      mono.study = "fredholm_monotone";
      mono.params = {{"T", temp}};
      double min_drop = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < dets.size(); ++i) min_drop = std::min(min_drop, dets[i - 1] - dets[i]);
      mono.value = broken ? kNaN : min_drop;
      mono.verdict = broken ? Verdict::error : check(min_drop > 0.0);
      records.push_back(std::move(mono));
    }
  } catch (const std::exception& e) {
    records.push_back(error_record("crosschecks", e));
  }
  return finalize(std::move(records), cfg);
}

std::vector<ResultRecord> run_fredholm(const LabConfig& cfg) {
  std::vector<double> temps = cfg.fredholm.t_list;
  temps.push_back(kClassicalAiry);
  std::vector<Task> tasks;
  for (double temp : temps)
    for (double s : cfg.s_list)
      tasks.push_back({"fredholm", {{"T", temp}, {"s", s}}, [&cfg, temp, s](ResultRecord& r) {
                         const int m = cfg.fredholm.m;
                         const double full = fredholm_logdet(build_nystrom(s, temp, m, cfg.fredholm.scale));
                         const double half = fredholm_logdet(build_nystrom(s, temp, m / 2, cfg.fredholm.scale));
                         r.value = std::exp(full);
                         r.aux = {{"log_det", full}, {"det_half_m", std::exp(half)},
                                  {"self_difference", std::abs(std::exp(full) - std::exp(half))}};
                         r.verdict = check(r.value > 0.0 && r.value <= 1.0 && std::abs(r.value - std::exp(half)) < 1e-8);
                       }});
  return finalize(run_tasks(tasks, cfg.workers), cfg);
}

std::vector<ResultRecord> run_idpii(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  std::vector<Task> tasks;
  std::vector<std::vector<ResultRecord>> snapshots(cfg.fredholm.t_list.size());
  for (std::size_t it = 0; it < cfg.fredholm.t_list.size(); ++it) {
    const double temp = cfg.fredholm.t_list[it];
    tasks.push_back({"idpii_checks", {{"T", temp}}, [&cfg, &snapshots, temp, it](ResultRecord& r) {
                       IdPiiOptions o = idpii_options(cfg, temp);
                       const IdPiiSolution sol = solve_idpii(o);
                       o.steps *= 2;
                       const IdPiiSolution fine = solve_idpii(o);

                       const double s_probe = std::clamp(0.0, o.s_min, o.s_max);
                       double doubling = 0.0;
                       for (double xi : {-10.0, -5.0, 0.0, 5.0})
                         doubling = std::max(doubling, std::abs(interp_phi(sol, xi, s_probe).phi -
                                                                interp_phi(fine, xi, s_probe).phi));
                       double init = 0.0;
                       const double t16 = std::pow(temp, 1.0 / 6.0);
                       for (std::size_t i = 0; i < sol.xi_grid.size(); ++i) {
                         const double arg = std::pow(temp, 2.0 / 3.0) * sol.xi_grid[i] + o.s_max * std::pow(temp, -1.0 / 3.0);
                         init = std::max(init, std::abs(sol.phi[0][i] - t16 * airy_or_zero(arg).ai));
                       }
                       const double min_i = *std::min_element(sol.i_of_s.begin(), sol.i_of_s.end());
                       r.value = idpii_ode_residual(sol);
                       r.aux = {{"step_doubling", doubling},
                                {"initial_data", init},
                                {"min_i", min_i},
                                {"boundary_ratio", sol.boundary_ratio},
                                {"truncation_flagged", sol.truncation_flagged ? 1.0 : 0.0}};
                       r.verdict = check(r.value <= 5e-4 && doubling <= 1e-6 && min_i >= 0.0 && init == 0.0);

                       // Snapshot every 0.5 in S.
                       const auto stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.5 / sol.s_step())));
                       for (std::size_t j = 0; j < sol.layers(); j += stride) {
                         ResultRecord snap;
                         snap.study = "idpii";
                         snap.params = {{"T", temp}, {"S", sol.s_grid[j]}};
                         snap.value = sol.i_of_s[j];
                         snap.aux = {{"p", sol.p_of_s[j]},
                                     {"i_minus_half_s", sol.i_of_s[j] - 0.5 * sol.s_grid[j]},
                                     {"phi_at_0", interp_phi(sol, 0.0, sol.s_grid[j]).phi}};
                         snap.verdict = Verdict::info;
                         snapshots[it].push_back(std::move(snap));
                       }
                     }});
  }
  records = run_tasks(tasks, cfg.workers);
  for (auto& snap : snapshots) records.insert(records.end(), snap.begin(), snap.end());
  return finalize(std::move(records), cfg);
}

std::vector<ResultRecord> run_eqmeasure(const LabConfig& cfg) {
  std::vector<ResultRecord> records;
  try {
    const EquilibriumMeasure eq = build_equilibrium(cfg);
    const double a = eq.a();
    double el_max = 0.0;
    for (int k = 1; k <= 9; ++k) el_max = std::max(el_max, std::abs(eq.el_residual(-a * k / 10.0)));
    double el_outside = std::numeric_limits<double>::infinity();
    for (double x : {0.5, 1.0, -a - 0.5, -a - 1.0}) el_outside = std::min(el_outside, eq.el_residual(x));
    ResultRecord sum;
    sum.study = "eqmeasure_summary";
    sum.value = eq.ell();
    sum.aux = {{"a", a},
               {"b_minus", eq.shift() - a},
               {"b_plus", eq.shift()},
               {"c_v", eq.c_v()},
               {"ell_check", eq.ell_check()},
               {"mass", eq.mass()},
               {"el_max_inside", el_max},
               {"el_min_outside", el_outside}};
    sum.verdict = check(std::abs(eq.mass() - 1.0) <= 1e-10 && el_max <= 1e-8 && el_outside > 0.0);
    records.push_back(std::move(sum));
    for (int k = 0; k <= 40; ++k) {
      ResultRecord r;
      r.study = "eqmeasure_density";
      const double x = -a + a * k / 40.0;
      r.params = {{"x", x}};
      r.value = eq.density(x);
      r.verdict = Verdict::info;
      records.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    records.push_back(error_record("eqmeasure", e));
  }
  return finalize(std::move(records), cfg);
}

const std::vector<std::string>& study_names() {
  static const std::vector<std::string> names{"theorem1",    "theorem2", "theorem3",  "crosschecks",
                                              "fredholm",    "idpii-solve", "eqmeasure"};
  return names;
}

std::vector<ResultRecord> run_study(std::string_view name, const LabConfig& cfg) {
  if (name == "theorem1") return run_theorem1(cfg);
  if (name == "theorem2") return run_theorem2(cfg);
  if (name == "theorem3") return run_theorem3(cfg);
  if (name == "crosschecks") return run_crosschecks(cfg);
  if (name == "fredholm") return run_fredholm(cfg);
  if (name == "idpii-solve") return run_idpii(cfg);
  if (name == "eqmeasure") return run_eqmeasure(cfg);
  throw ConfigError("unknown study '" + std::string(name) + "'");
}

int exit_code_for(const std::vector<ResultRecord>& records) {
  bool failed = false;
  for (const auto& r : records) {
    if (r.verdict == Verdict::error) return 4;
    failed = failed || r.verdict == Verdict::fail;
  }
  return failed ? 1 : 0;
}

}  // namespace ftlab::lab
