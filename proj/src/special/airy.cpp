#include "ftlab/special/airy.hpp"

#include <cmath>
#include <numbers>

#include "ftlab/errors.hpp"

namespace ftlab {

namespace detail {

namespace {
// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kMinusAiPrime0 = 0.258819403792806798405183560189203963L;
}  // namespace

AiryPair airy_maclaurin(double xd) {
  // Ai = c1 f - c2 g with f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
  const long double x = xd;
  const long double x3 = x * x * x;
  long double tf = 1.0L, tg = x, tfp = 0.5L * x * x, tgp = 1.0L;
  long double f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 0; k < 400; ++k) {
    const long double k3 = 3.0L * k;
    tf *= x3 / ((k3 + 2.0L) * (k3 + 3.0L));
    tg *= x3 / ((k3 + 3.0L) * (k3 + 4.0L));
    tfp *= x3 / ((k3 + 3.0L) * (k3 + 5.0L));
    tgp *= x3 / ((k3 + 1.0L) * (k3 + 3.0L));
    f += tf;
    g += tg;
    fp += tfp;
    gp += tgp;
    const long double tiny = 1e-21L * (std::fabs(f) + std::fabs(g) + std::fabs(fp) + std::fabs(gp));
    if (std::fabs(tf) + std::fabs(tg) + std::fabs(tfp) + std::fabs(tgp) < tiny) break;
  }
  return {static_cast<double>(kAi0 * f - kMinusAiPrime0 * g), static_cast<double>(kAi0 * fp - kMinusAiPrime0 * gp)};
}

namespace {

// Coefficients u_k, v_k of the large-argument expansions, truncated at the
// smallest term.
struct AsymptoticSums {
  long double u_even, u_odd, v_even, v_odd;  // alternating-sign sums split by parity
  long double u_all, v_all;                  // (-1)^k-weighted full sums
};

AsymptoticSums asymptotic_sums(long double zeta) {
  AsymptoticSums r{1.0L, 0.0L, 1.0L, 0.0L, 1.0L, 1.0L};
  long double u = 1.0L;
  long double prev = 1.0L;
  long double zpow = 1.0L;
  for (int k = 1; k < 200; ++k) {
    u *= (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) / ((2.0L * k - 1.0L) * 216.0L * k);
    const long double v = -(6.0L * k + 1.0L) / (6.0L * k - 1.0L) * u;
    zpow /= zeta;
    const long double tu = u * zpow;
    const long double tv = v * zpow;
    const long double mag = std::fabs(tu) + std::fabs(tv);
    if (mag > prev) break;
    prev = mag;
    const long double sign_k = (k % 2 == 0) ? 1.0L : -1.0L;
    r.u_all += sign_k * tu;
    r.v_all += sign_k * tv;
    // Negative-argument sums use (-1)^j on u_{2j} and u_{2j+1}.
    if (k % 2 == 0) {
      const long double sj = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
      r.u_even += sj * tu;
      r.v_even += sj * tv;
    } else {
      const long double sj = (((k - 1) / 2) % 2 == 0) ? 1.0L : -1.0L;
      r.u_odd += sj * tu;
      r.v_odd += sj * tv;
    }
    if (mag < 1e-21L) break;
  }
  return r;
}

}  // namespace

AiryPair airy_asymptotic_positive(double xd) {
  const long double x = xd;
  const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const long double x14 = std::sqrt(std::sqrt(x));
  const long double e = std::exp(-zeta) / (2.0L * std::sqrt(std::numbers::pi_v<long double>));
  return {static_cast<double>(e / x14 * s.u_all), static_cast<double>(-e * x14 * s.v_all)};
}

AiryPair airy_asymptotic_negative(double xd) {
  const long double z = -static_cast<long double>(xd);
  const long double zeta = 2.0L / 3.0L * z * std::sqrt(z);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const long double z14 = std::sqrt(std::sqrt(z));
  const long double rpi = 1.0L / std::sqrt(std::numbers::pi_v<long double>);
  const long double phase = zeta - std::numbers::pi_v<long double> / 4.0L;
  const long double c = std::cos(phase);
  const long double sn = std::sin(phase);
  const long double ai = rpi / z14 * (c * s.u_even + sn * s.u_odd);
  const long double aip = rpi * z14 * (sn * s.v_even - c * s.v_odd);
  return {static_cast<double>(ai), static_cast<double>(aip)};
}

}  // namespace detail

AiryPair airy(double x) {
  if (!(std::abs(x) <= 200.0)) throw DomainError("airy: |x| must not exceed 200");
  if (x > detail::kAiryPositiveSwitch) return detail::airy_asymptotic_positive(x);
  if (x < detail::kAiryNegativeSwitch) return detail::airy_asymptotic_negative(x);
  return detail::airy_maclaurin(x);
}

double airy_ai(double x) { return airy(x).ai; }
double airy_ai_prime(double x) { return airy(x).ai_prime; }

AiryPair airy_or_zero(double x) {
  if (x > 105.0) return {0.0, 0.0};
  return airy(x);
}

}  // namespace ftlab
