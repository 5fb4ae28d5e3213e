#pragma once

#include <span>
#include <vector>

#include "logderiv/polynomial.hpp"

namespace logderiv {

/// Coefficients of a polynomial in the Bernstein basis of fixed degree
/// (size - 1) on some interval [lo, hi], parametrized by u in [0, 1].
using BernsteinCoeffs = std::vector<double>;

/// Product of two Bernstein polynomials on the same interval.
[[nodiscard]] BernsteinCoeffs bernstein_product(std::span<const double> a, std::span<const double> b);

/// Value at parameter u in [0, 1] by de Casteljau's algorithm.
[[nodiscard]] double bernstein_eval(std::span<const double> b, double u);

/// Halves of the control polygon at u = 1/2.
void bernstein_split(std::span<const double> b, BernsteinCoeffs& left, BernsteinCoeffs& right);

/// Bernstein coefficients on [lo, hi] of a power-basis polynomial.
[[nodiscard]] BernsteinCoeffs bernstein_from_power(const Polynomial& p, double lo, double hi);

}  // namespace logderiv
