#pragma once

#include <cstddef>

#include "logderiv/adaptive.hpp"
#include "logderiv/poles.hpp"

namespace logderiv {

/// Integrand selection for lp_mean: |x g_n(x)|^p when weighted, |g_n(x)|^p otherwise.
struct MeanSpec {
  double p = 1.0;
  bool weighted = false;
  double rel_tol = 1e-8;
  std::size_t max_panels = 200000;

  /// Throws std::invalid_argument unless p > 0 and rel_tol in (0, 1e-2].
  void validate() const;
};

/// int_{-1}^{1} |g_n(x)|^p (|x|^p) dx.
///
/// Initial breaks sit at 0 and at every Re z_k, with geometric grading of
/// ratio 1/2 outward from Re z_k starting at max(|Im z_k|, 1e-13). A pole at
/// +1 or -1 makes the integral divergent for p >= 1 (reported through the
/// `divergent` flag with value +inf); for p < 1 the endpoint zone is mapped
/// by u = w t^(1/(1-p)), which removes the |u|^-p singularity.
[[nodiscard]] QuadratureResult lp_mean(const PoleSet& poles, const MeanSpec& spec);

struct AreaOptions {
  double rel_tol = 1e-6;
  std::size_t max_panels = 20000;
};

/// Area integral of |g_n| over the unit disk, computed as
/// int_0^pi dt int_{-1}^{1} |r g_n(r e^{it})| dr. The inner integral is the
/// weighted p = 1 mean of the poles rotated by -t, evaluated at rel_tol/10.
[[nodiscard]] QuadratureResult area_integral(const PoleSet& poles, const AreaOptions& options = {});

struct Theorem1Report {
  double p = 0.0;
  std::size_t n = 0;
  QuadratureResult unweighted;
  QuadratureResult weighted;
  double bound = 0.0;  ///< C_p n^(p-1)
  bool unweighted_ge_weighted = false;
  bool weighted_ge_bound = false;

  [[nodiscard]] bool all_true() const { return unweighted_ge_weighted && weighted_ge_bound; }
};

/// Both means at exponent p and the chain unweighted >= weighted >= C_p n^(p-1).
/// A divergent integral satisfies every lower bound. Strict inequality is not
/// certifiable in floating point; comparisons allow 10 rel_tol of slack.
[[nodiscard]] Theorem1Report theorem1_check(const PoleSet& poles, double p, double rel_tol = 1e-8);

}  // namespace logderiv
