#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace ftlab {

/// Real polynomial stored by ascending coefficients, c[0] + c[1] x + ...
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  /// Horner evaluation.
  double operator()(double x) const noexcept;

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double coefficient(int k) const noexcept;
  double leading_coefficient() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  Polynomial derivative() const;
  /// Antiderivative vanishing at zero.
  Polynomial antiderivative() const;
  /// x -> p(x + c).
  Polynomial shifted(double c) const;
  Polynomial scaled(double factor) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

}  // namespace ftlab
