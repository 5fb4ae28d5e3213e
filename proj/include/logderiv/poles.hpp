#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "logderiv/polynomial.hpp"

namespace logderiv {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Snap tolerance applied to angles read from files.
inline constexpr double kAngleSnapTolerance = 1e-14;

/// Reduce an angle to [0, 2*pi). With snap > 0, angles within snap of
/// 0 (or 2*pi) and pi are replaced by those values exactly.
[[nodiscard]] double normalize_angle(double theta, double snap = 0.0);

/// The poles z_k = exp(i theta_k) of g_n(z) = sum_k 1/(z - z_k).
/// Angles are the source of truth; |z_k| = 1 holds by construction.
class PoleSet {
 public:
  /// Throws std::invalid_argument on an empty list or a non-finite angle.
  explicit PoleSet(std::vector<double> angles, double snap = 0.0);

  [[nodiscard]] std::size_t size() const { return angles_.size(); }
  [[nodiscard]] std::span<const double> angles() const { return angles_; }
  [[nodiscard]] double angle(std::size_t k) const { return angles_[k]; }

  /// Re z_k. Exactly +1 / -1 for real poles, exactly 0 when |cos| is below 1e-15.
  [[nodiscard]] double re(std::size_t k) const { return re_[k]; }
  [[nodiscard]] double im(std::size_t k) const { return im_[k]; }
  [[nodiscard]] Complex point(std::size_t k) const { return {re_[k], im_[k]}; }

  /// z_k in {+1, -1}, decided by exact comparison of the normalized angle.
  [[nodiscard]] bool is_real_pole(std::size_t k) const;
  [[nodiscard]] bool has_real_pole() const;

  /// Poles multiplied by exp(i phi).
  [[nodiscard]] PoleSet rotated(double phi) const;
  /// theta_k -> -theta_k.
  [[nodiscard]] PoleSet conjugated() const;

  friend bool operator==(const PoleSet& a, const PoleSet& b) { return a.angles_ == b.angles_; }

 private:
  std::vector<double> angles_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// g_n(z) = sum_k 1/(z - z_k). Throws PoleHit when z equals a pole point.
[[nodiscard]] Complex eval_logderiv(const PoleSet& poles, Complex z);

/// F(x) = Re(x g_n(x)) = sum_k (x^2 - a_k x)/(x^2 - 2 a_k x + 1), a_k = Re z_k.
/// Sign is kept. Throws PoleHit at a real pole; DomainError outside [-1, 1].
[[nodiscard]] double eval_level(const PoleSet& poles, double x);

/// dF/dx, same domain as eval_level.
[[nodiscard]] double eval_level_derivative(const PoleSet& poles, double x);

/// P(v; x) = (1 - x^2)/(1 - 2 x cos v + x^2), v given by its angle.
[[nodiscard]] double poisson_kernel(double v_angle, double x);

/// F as an explicit ratio of real polynomials. Poles with equal real part
/// are grouped; a real pole at +-1 contributes x/(x -+ 1).
struct RationalLevelFunction {
  Polynomial numerator;
  Polynomial denominator;
  std::size_t n = 0;
  std::vector<std::size_t> real_pole_indices;

  [[nodiscard]] double operator()(double x) const { return numerator(x) / denominator(x); }
};

[[nodiscard]] RationalLevelFunction to_rational(const PoleSet& poles);

}  // namespace logderiv
