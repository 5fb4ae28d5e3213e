#pragma once

#include <cstddef>

#include "logderiv/adaptive.hpp"
#include "logderiv/intervals.hpp"
#include "logderiv/poles.hpp"

namespace logderiv {

/// Parameters of the sharpness family g~_n(x) = n x^(n-1)/(x^n + i).
struct ExtremalSpec {
  std::size_t n = 1;
  double p = 1.0;
  double delta = 0.25;

  /// kappa = min(p - 1, 0)
  [[nodiscard]] double kappa() const { return p - 1.0 < 0.0 ? p - 1.0 : 0.0; }
};

[[nodiscard]] Complex eval_gtilde(std::size_t n, double x);

/// Re(x g~_n(x)) = n x^(2n)/(x^(2n) + 1).
[[nodiscard]] double re_x_gtilde(std::size_t n, double x);

/// int_{-1}^{1} |g~_n|^p dx through its reduced form
/// 2 n^(p-1) int_0^1 t^((1-1/n)(p-1)) (t^2+1)^(-p/2) dt, at 1e-10 relative.
[[nodiscard]] double lp_mean_gtilde(std::size_t n, double p);

/// The same integral by direct quadrature of |g~_n(x)|^p over [-1,1].
[[nodiscard]] QuadratureResult lp_mean_gtilde_direct(std::size_t n, double p, double rel_tol = 1e-8);

/// C~_p = int_0^1 2 t^kappa (t^2+1)^(-p/2) dt.
[[nodiscard]] double ctilde(double p);

/// E_delta(g~_n) = {|x| >= (1/delta - 1)^(-1/(2n))} for delta < 1/2, empty otherwise.
[[nodiscard]] IntervalUnion level_set_gtilde(std::size_t n, double delta);

/// The n poles of g~_n, i.e. the solutions of z^n = -i.
[[nodiscard]] PoleSet to_poleset(std::size_t n);

}  // namespace logderiv
