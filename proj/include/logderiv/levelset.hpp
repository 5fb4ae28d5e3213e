#pragma once

#include <cstddef>

#include "logderiv/intervals.hpp"
#include "logderiv/poles.hpp"
#include "logderiv/roots.hpp"

namespace logderiv {

/// Level delta*n of |Re(x g_n(x))|. The window-mass guarantee needs delta in
/// (0, 1/2); any delta > 0 is accepted for exploration.
class LevelQuery {
 public:
  LevelQuery(double delta, std::size_t n);

  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] double threshold() const { return threshold_; }
  [[nodiscard]] bool in_theorem_range() const { return delta_ < 0.5; }

 private:
  double delta_;
  std::size_t n_;
  double threshold_;
};

/// E_delta = {x in [-1,1] : |F(x)| >= delta n} with F = Re(x g_n(x)).
///
/// Roots of level_polynomial(poles, +-delta n) are isolated on [-1,1], each
/// is refined to IsolationOptions::min_width and polished by one Newton step
/// on the direct sum for F; the sign of |F| - delta n is then read at the
/// midpoint of every gap between consecutive roots. Pieces of zero length
/// (tangencies) are dropped.
/// Bernstein coefficients on [-1,1] of N - level * D, where N/D is the
/// rational form of F. Built from the factored form so that no power-basis
/// conversion is involved; the denominator factors have nonnegative
/// coefficients.
[[nodiscard]] BernsteinCoeffs level_polynomial(const PoleSet& poles, double level);

[[nodiscard]] IntervalUnion level_set(const PoleSet& poles, const LevelQuery& query,
                                      const IsolationOptions& options = {});

/// Delta = {x in [-1,1] : |x| > 1 - 3/((2+4 delta) n)}, stored with closed ends.
[[nodiscard]] IntervalUnion delta_window(std::size_t n, double delta);

}  // namespace logderiv
