#pragma once

#include <cstddef>
#include <span>

namespace logderiv {

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// with O(log n) rounding growth instead of O(n).
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace logderiv
