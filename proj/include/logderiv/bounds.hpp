#pragma once

#include <cstddef>
#include <numbers>

namespace logderiv {

/// C_p = 3 p^p (p+1)^(1-p) / (2^(p+5) (1+2p)^2), the constant in
/// int_{-1}^{1} |x g_n(x)|^p dx > C_p n^(p-1).
[[nodiscard]] double theorem1_constant(double p);

/// C_p n^(p-1).
[[nodiscard]] double theorem1_bound(double p, std::size_t n);

/// K(delta) = (3/32)(1 - 2 delta)/(1 + 2 delta)^2, the level-set measure constant.
[[nodiscard]] double theorem2_constant(double delta);

/// ln(1/delta - 1): upper constant for the level sets of the sharpness family.
[[nodiscard]] double sharpness_level_constant(double delta);

/// Lower bound for the area integral of |g_n| over the unit disk.
inline constexpr double kDiskAreaBound = std::numbers::pi / 18.0;
/// pi/192, the area-integral bound implied by the interval bound at p = 1.
inline constexpr double kIntervalAreaBound = std::numbers::pi / 192.0;

}  // namespace logderiv
