#include "logderiv/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace logderiv {

namespace {

constexpr double kClosedFormTol = 1e-10;

/// int_0^1 t^e phi(t) dt for e > -1; t = s^(1/(1+e)) when e < 0 removes the
/// endpoint singularity.
template <typename Phi>
double integrate_power_weight(double e, Phi phi) {
  AdaptiveOptions opts{kClosedFormTol, 0.0, 200000};
  if (e >= 0.0) {
    return integrate([e, &phi](double t) { return std::pow(t, e) * phi(t); }, 0.0, 1.0, opts).value;
  }
  const double q = 1.0 / (1.0 + e);
  return integrate([q, &phi](double s) { return q * phi(std::pow(s, q)); }, 0.0, 1.0, opts).value;
}

void require_positive(std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("extremal: n must be positive");
  if (!(p > 0.0)) throw std::invalid_argument("extremal: p must be positive");
}

}  // namespace

Complex eval_gtilde(std::size_t n, double x) {
  if (n == 0) throw std::invalid_argument("eval_gtilde: n must be positive");
  const double nd = static_cast<double>(n);
  const double xn1 = std::pow(x, static_cast<int>(n - 1));
  const Complex den{std::pow(x, static_cast<int>(n)), 1.0};
  return Complex{nd * xn1, 0.0} / den;
}

double re_x_gtilde(std::size_t n, double x) {
  if (n == 0) throw std::invalid_argument("re_x_gtilde: n must be positive");
  const double x2n = std::pow(x, static_cast<int>(2 * n));
  return static_cast<double>(n) * x2n / (x2n + 1.0);
}

double lp_mean_gtilde(std::size_t n, double p) {
  require_positive(n, p);
  const double nd = static_cast<double>(n);
  const double e = (1.0 - 1.0 / nd) * (p - 1.0);
  const double integral = integrate_power_weight(e, [p](double t) { return std::pow(t * t + 1.0, -0.5 * p); });
  return 2.0 * std::pow(nd, p - 1.0) * integral;
}

QuadratureResult lp_mean_gtilde_direct(std::size_t n, double p, double rel_tol) {
  require_positive(n, p);
  const std::vector<double> breaks{0.0};
  return integrate([n, p](double x) { return std::pow(std::abs(eval_gtilde(n, x)), p); }, -1.0, 1.0,
                   AdaptiveOptions{rel_tol, 0.0, 200000}, breaks);
}

double ctilde(double p) {
  require_positive(1, p);
  const ExtremalSpec spec{1, p, 0.25};
  return 2.0 * integrate_power_weight(spec.kappa(), [p](double t) { return std::pow(t * t + 1.0, -0.5 * p); });
}

IntervalUnion level_set_gtilde(std::size_t n, double delta) {
  if (n == 0) throw std::invalid_argument("level_set_gtilde: n must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("level_set_gtilde: delta must be positive");
  if (delta >= 0.5) return {};
  const double cutoff = std::pow(1.0 / delta - 1.0, -1.0 / (2.0 * static_cast<double>(n)));
  return symmetric_tails(cutoff);
}

PoleSet to_poleset(std::size_t n) {
  if (n == 0) throw std::invalid_argument("to_poleset: n must be positive");
  std::vector<double> angles;
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) angles.push_back((1.5 * kPi + kTwoPi * static_cast<double>(k)) / nd);
  return PoleSet(std::move(angles));
}

}  // namespace logderiv
