#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logderiv {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double length() const { return hi - lo; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, sorted, with cached measure.
/// The constructor sorts its input and merges overlapping or touching pieces.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> pieces);

  [[nodiscard]] std::span<const Interval> intervals() const { return intervals_; }
  [[nodiscard]] std::size_t size() const { return intervals_.size(); }
  [[nodiscard]] bool empty() const { return intervals_.empty(); }
  [[nodiscard]] double measure() const { return measure_; }
  [[nodiscard]] bool contains(double x) const;
  /// Every piece of `other` lies inside one piece of *this.
  [[nodiscard]] bool contains(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) { return a.intervals_ == b.intervals_; }

 private:
  std::vector<Interval> intervals_;
  double measure_ = 0.0;
};

[[nodiscard]] inline double measure(const IntervalUnion& u) { return u.measure(); }

[[nodiscard]] IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

/// {x in [-1,1] : |x| >= c}; empty when c > 1, [-1,1] when c <= 0.
[[nodiscard]] IntervalUnion symmetric_tails(double c);

}  // namespace logderiv
