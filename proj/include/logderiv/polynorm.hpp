#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "logderiv/poles.hpp"

namespace logderiv {

/// Snap tolerance for zeros read from input: |z| and Im z.
inline constexpr double kZeroSnapTolerance = 1e-14;

/// p(z) = leading * prod_k (z - z_k) with every z_k in the closed unit disk.
/// Never expanded into coefficients.
class DiskPolynomial {
 public:
  /// Throws std::invalid_argument if a zero lies outside |z| <= 1 + 1e-14,
  /// the leading coefficient vanishes, or there are no zeros. Zeros within
  /// the tolerance outside the circle are pulled onto it; |Im z| <= 1e-14 is
  /// snapped to 0.
  DiskPolynomial(std::vector<Complex> zeros, Complex leading = {1.0, 0.0});

  [[nodiscard]] std::size_t degree() const { return zeros_.size(); }
  [[nodiscard]] const std::vector<Complex>& zeros() const { return zeros_; }
  [[nodiscard]] Complex leading() const { return leading_; }

  [[nodiscard]] Complex operator()(double x) const;
  /// p'(x) = p(x) sum_k 1/(x - z_k), by the product rule when x is a zero.
  [[nodiscard]] Complex derivative(double x) const;

 private:
  std::vector<Complex> zeros_;
  Complex leading_;
};

/// sup_{[-1,1]} f for a continuous nonnegative f behaving like |polynomial|
/// of the given degree: Chebyshev sampling at 8(degree+1) points followed by
/// golden-section refinement of every sampled local maximum to 1e-12 in x.
[[nodiscard]] double sup_on_interval(const std::function<double(double)>& f, std::size_t degree);

enum class NormOf { Value, Derivative };

/// Chebyshev norm ||p|| or ||p'|| on [-1, 1].
[[nodiscard]] double cheb_norm(const DiskPolynomial& p, NormOf which = NormOf::Value);

struct NormReport {
  double norm = 0.0;             ///< ||p||
  double derivative_norm = 0.0;  ///< ||p'||
  double factor = 0.0;           ///< claimed lower bound for ||p'|| / ||p||
  bool holds = false;
};

/// ||p'|| >= ||p||/4 - 1e-10.
[[nodiscard]] NormReport verify_cor1(const DiskPolynomial& p);

struct ZeroCounts {
  std::size_t plus = 0;   ///< Im z_k > 0
  std::size_t minus = 0;  ///< Im z_k < 0
  std::size_t zero = 0;   ///< Im z_k == 0
};

[[nodiscard]] ZeroCounts count_zeros(const DiskPolynomial& p);

/// max{1/4, (1/900) sqrt((max(n+, n-) + n0)/(2 min(n+, n-) + 1))}.
[[nodiscard]] double cor2_factor(const ZeroCounts& counts);

struct Cor2Report {
  ZeroCounts counts;
  NormReport norms;
};

/// ||p'|| >= cor2_factor * ||p|| - 1e-10.
[[nodiscard]] Cor2Report verify_cor2(const DiskPolynomial& p);

/// |p'(at)/p(at)| at at = +1 or -1. Throws ZeroAtEndpoint when p(at) = 0,
/// std::invalid_argument for any other `at`.
[[nodiscard]] double endpoint_ratio(const DiskPolynomial& p, double at);

struct GDeltaReport {
  double delta = 0.0;
  double measure_negative = 0.0;  ///< estimate of mu(G_delta intersect [-1, 0])
  double measure_positive = 0.0;  ///< estimate of mu(G_delta intersect [0, 1])
  [[nodiscard]] bool both_positive() const { return measure_negative > 0.0 && measure_positive > 0.0; }
};

/// Estimates the two half-interval measures of G_delta = {|p'| >= delta n |p|}
/// on a 4096-point grid per half, locating each sign change of
/// |p'| - delta n |p| by bisection. Requires 0 < delta < 1/2.
[[nodiscard]] GDeltaReport g_delta_positivity(const DiskPolynomial& p, double delta);

}  // namespace logderiv
