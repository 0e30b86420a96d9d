#include "ftlab/equilibrium/potential.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ftlab/errors.hpp"

namespace ftlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct ChebyshevSums {
  double f1, f2;                      // moment conditions
  double d1_dm, d1_dr, d2_dm, d2_dr;  // Jacobian
};

ChebyshevSums chebyshev_sums(const Polynomial& dv, const Polynomial& d2v, double mid, double half) {
  const int m = dv.degree() + 12;
  ChebyshevSums s{};
  for (int k = 1; k <= m; ++k) {
    const double c = std::cos((k - 0.5) * kPi / m);
    const double x = mid + half * c;
    const double v1 = dv(x);
    const double v2 = d2v(x);
    s.f1 += v1;
    s.f2 += x * v1;
    s.d1_dm += v2;
    s.d1_dr += v2 * c;
    s.d2_dm += v1 + x * v2;
    s.d2_dr += (v1 + x * v2) * c;
  }
  // (1/2pi) * (pi/m) * sum
  const double f = 1.0 / (2.0 * m);
  s.f1 *= f;
  s.f2 = s.f2 * f - 1.0;
  s.d1_dm *= f;
  s.d1_dr *= f;
  s.d2_dm *= f;
  s.d2_dr *= f;
  return s;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Potential::Potential(Polynomial poly) : poly_(std::move(poly)) {
  if (poly_.degree() < 2 || poly_.degree() % 2 != 0)
    throw DomainError("Potential: degree must be even and at least 2");
  if (!(poly_.leading_coefficient() > 0.0)) throw DomainError("Potential: leading coefficient must be positive");
}

double Potential::argmin() const {
  // Coarse scan over a Cauchy bound for the critical points, then Newton on V'.
  const Polynomial dv = poly_.derivative();
  const Polynomial d2v = dv.derivative();
  double bound = 1.0;
  for (int k = 0; k < dv.degree(); ++k) bound = std::max(bound, 1.0 + std::abs(dv.coefficient(k) / dv.leading_coefficient()));
  double best = 0.0;
  double best_val = poly_(0.0);
  const int samples = 4000;
  for (int i = 0; i <= samples; ++i) {
    const double x = -bound + 2.0 * bound * i / samples;
    const double v = poly_(x);
    if (v < best_val) {
      best_val = v;
      best = x;
    }
  }
  for (int it = 0; it < 60; ++it) {
    const double c = d2v(best);
    if (!(c > 0.0)) break;
    const double step = dv(best) / c;
    best -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(best))) break;
  }
  return best;
}

SupportResidual support_residual(const Potential& v, SupportEndpoints e) {
  const Polynomial dv = v.poly().derivative();
  const auto s = chebyshev_sums(dv, dv.derivative(), 0.5 * (e.b_plus + e.b_minus), 0.5 * (e.b_plus - e.b_minus));
  return {s.f1, s.f2};
}

SupportEndpoints solve_support(const Potential& v, std::optional<SupportEndpoints> guess) {
  const Polynomial dv = v.poly().derivative();
  const Polynomial d2v = dv.derivative();

  double mid = 0.0;
  double half = 1.0;
  if (guess) {
    mid = 0.5 * (guess->b_plus + guess->b_minus);
    half = 0.5 * (guess->b_plus - guess->b_minus);
  } else {
    // For g x^{2p}: 2p g half^{2p} C(2p,p)/4^p / 2 = 1.
    const int deg = v.poly().degree();
    const int p = deg / 2;
    const double g = v.poly().leading_coefficient();
    half = std::pow(2.0 * std::pow(4.0, p) / (2.0 * p * g * binomial(2 * p, p)), 1.0 / deg);
    mid = v.argmin();
  }
  if (!(half > 0.0)) throw NoOneCutSolution("solve_support: invalid initial interval");

  const auto norm = [](const ChebyshevSums& s) { return std::hypot(s.f1, s.f2); };
  ChebyshevSums cur = chebyshev_sums(dv, d2v, mid, half);
  for (int iter = 0; iter < 200; ++iter) {
    if (norm(cur) < 1e-13) return {mid - half, mid + half};
    const double det = cur.d1_dm * cur.d2_dr - cur.d1_dr * cur.d2_dm;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) break;
    const double dm = (cur.f1 * cur.d2_dr - cur.f2 * cur.d1_dr) / det;
    const double dr = (cur.d1_dm * cur.f2 - cur.d2_dm * cur.f1) / det;
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const double m_try = mid - lambda * dm;
      const double r_try = half - lambda * dr;
      if (!(r_try > 0.0)) continue;
      const ChebyshevSums trial = chebyshev_sums(dv, d2v, m_try, r_try);
      if (norm(trial) < norm(cur) || norm(trial) < 1e-13) {
        mid = m_try;
        half = r_try;
        cur = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (norm(cur) < 1e-12 && half > 0.0) return {mid - half, mid + half};
  throw NoOneCutSolution("solve_support: Newton iteration for the endpoints did not converge");
}

ShiftedPotential shift_to_zero(const Potential& v) {
  const SupportEndpoints e = solve_support(v);
  return {v.shifted(e.b_plus), e.b_plus, e.b_plus - e.b_minus};
}

Polynomial compute_h(const Potential& v_shifted, double a) {
  const Polynomial dv = v_shifted.poly().derivative();
  const int d = dv.degree();
  // (z(z+a))^{-1/2} = sum_k binom(-1/2, k) a^k z^{-k-1}
  std::vector<double> series(static_cast<std::size_t>(d) + 1);
  double c = 1.0;
  for (int k = 0; k <= d; ++k) {
    series[static_cast<std::size_t>(k)] = c;
    c *= a * (-0.5 - k) / (k + 1.0);
  }
  std::vector<double> h(static_cast<std::size_t>(std::max(d, 1)), 0.0);
  for (int p = 0; p < d; ++p) {
    double acc = 0.0;
    for (int k = 0; p + k + 1 <= d; ++k) acc += dv.coefficient(p + k + 1) * series[static_cast<std::size_t>(k)];
    h[static_cast<std::size_t>(p)] = acc;
  }
  return Polynomial(std::move(h));
}

}  // namespace ftlab
