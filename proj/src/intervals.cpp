#include "logderiv/intervals.hpp"

#include <algorithm>
#include <stdexcept>

#include "logderiv/summation.hpp"

namespace logderiv {

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
  for (const Interval& p : pieces)
    if (!(p.lo <= p.hi)) throw std::invalid_argument("IntervalUnion: interval with lo > hi");
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  for (const Interval& p : pieces) {
    if (!intervals_.empty() && p.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, p.hi);
    } else {
      intervals_.push_back(p);
    }
  }
  std::vector<double> lengths;
  lengths.reserve(intervals_.size());
  for (const Interval& p : intervals_) lengths.push_back(p.length());
  measure_ = pairwise_sum<double>(lengths);
}

bool IntervalUnion::contains(double x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& p) { return v < p.lo; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  return std::all_of(other.intervals_.begin(), other.intervals_.end(), [this](const Interval& piece) {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&piece](const Interval& mine) { return mine.contains(piece); });
  });
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  const auto ia = a.intervals();
  const auto ib = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < ia.size() && j < ib.size()) {
    const double lo = std::max(ia[i].lo, ib[j].lo);
    const double hi = std::min(ia[i].hi, ib[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ia[i].hi < ib[j].hi) ++i;
    else ++j;
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion symmetric_tails(double c) {
  if (c > 1.0) return {};
  if (c <= 0.0) return IntervalUnion({{-1.0, 1.0}});
  return IntervalUnion({{-1.0, -c}, {c, 1.0}});
}

}  // namespace logderiv
