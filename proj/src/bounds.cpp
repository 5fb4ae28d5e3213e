#include "logderiv/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace logderiv {

double theorem1_constant(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("theorem1_constant: p must be positive");
  const double s = 1.0 + 2.0 * p;
  return 3.0 * std::pow(p, p) * std::pow(p + 1.0, 1.0 - p) / (std::pow(2.0, p + 5.0) * s * s);
}

double theorem1_bound(double p, std::size_t n) {
  return theorem1_constant(p) * std::pow(static_cast<double>(n), p - 1.0);
}

double theorem2_constant(double delta) {
  const double s = 1.0 + 2.0 * delta;
  return (3.0 / 32.0) * (1.0 - 2.0 * delta) / (s * s);
}

double sharpness_level_constant(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("sharpness_level_constant: delta must be positive");
  return std::log(1.0 / delta - 1.0);
}

}  // namespace logderiv
