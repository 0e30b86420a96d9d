#pragma once

namespace ftlab {

struct AiryPair {
  double ai;
  double ai_prime;
};

/// Ai and Ai' for |x| <= 200 (DomainError beyond).
///
/// Maclaurin series (extended precision) on -8 <= x <= 5.5, exponential
/// asymptotics for x > 5.5 and the oscillatory asymptotic form for x < -8.
/// Absolute accuracy is about 1e-13 on [-30, 30].
AiryPair airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

/// Same as airy() but returns exact zeros once Ai underflows (x > 105);
/// for kernel assembly where nodes run off to infinity.
AiryPair airy_or_zero(double x);

namespace detail {
/// The individual representations, exposed for overlap testing.
AiryPair airy_maclaurin(double x);
AiryPair airy_asymptotic_positive(double x);
AiryPair airy_asymptotic_negative(double x);
inline constexpr double kAiryPositiveSwitch = 5.5;
inline constexpr double kAiryNegativeSwitch = -8.0;
}  // namespace detail

}  // namespace ftlab
