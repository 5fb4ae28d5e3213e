#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace logderiv {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool divergent = false;
  std::size_t panels = 0;
  std::size_t function_evals = 0;
};

/// Raised when the requested tolerance is out of reach within the panel
/// budget; carries the partial result.
class ToleranceNotMet : public std::runtime_error {
 public:
  ToleranceNotMet(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  [[nodiscard]] const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// One initial panel [lo, hi] of integrand `fn` (an index into the integrand list).
struct Segment {
  std::size_t fn = 0;
  double lo = 0.0;
  double hi = 0.0;
};

struct AdaptiveOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  std::size_t max_panels = 200000;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature over a set of initial
/// segments: the panel with the largest error estimate is bisected until
/// sum(error) <= max(abs_tol, rel_tol |sum(value)|). The final sums run over
/// panels in (fn, lo) order with pairwise reduction, so the result is
/// bit-stable for a fixed panel tree. Throws ToleranceNotMet.
[[nodiscard]] QuadratureResult integrate_segments(std::span<const Integrand> integrands,
                                                  std::span<const Segment> segments,
                                                  const AdaptiveOptions& options);

/// Single integrand over [lo, hi] with optional interior breakpoints.
[[nodiscard]] QuadratureResult integrate(const Integrand& f, double lo, double hi,
                                         const AdaptiveOptions& options,
                                         std::span<const double> breaks = {});

}  // namespace logderiv
