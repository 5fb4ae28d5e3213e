#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace logderiv {

/// Dense real polynomial, coefficients in ascending degree.
/// The zero polynomial is stored as an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c);
  /// x^2 - 2 a x + 1
  static Polynomial unit_quadratic(double a);

  [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
  [[nodiscard]] double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

}  // namespace logderiv
