#include "logderiv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "logderiv/errors.hpp"

namespace logderiv {

namespace {

int sign_variations(const std::vector<double>& b) {
  int count = 0;
  int last = 0;
  for (double c : b) {
    const int s = (c > 0.0) - (c < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Divide out exact zeros at u = 0 and u = 1; the caller has already
/// recorded those roots.
void deflate_ends(std::vector<double>& b) {
  while (b.size() > 1 && b.back() == 0.0) {
    const double d = static_cast<double>(b.size() - 1);
    b.pop_back();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] *= d / (d - static_cast<double>(i));
  }
  while (b.size() > 1 && b.front() == 0.0) {
    const double d = static_cast<double>(b.size() - 1);
    for (std::size_t i = 1; i < b.size(); ++i) b[i - 1] = b[i] * d / static_cast<double>(i);
    b.pop_back();
  }
}

struct Isolator {
  double min_width;
  std::vector<RootBracket> out;

  void run(std::vector<double> b, double lo, double hi) {
    deflate_ends(b);
    const int v = sign_variations(b);
    if (v == 0) return;
    if (v == 1) {
      out.push_back({lo, hi, false});
      return;
    }
    if (hi - lo <= min_width) {
      out.push_back({lo, hi, v != 1});
      return;
    }
    std::vector<double> left, right;
    bernstein_split(b, left, right);
    const double mid = 0.5 * (lo + hi);
    run(std::move(left), lo, mid);
    if (right.front() == 0.0) out.push_back({mid, mid, false});
    run(std::move(right), mid, hi);
  }
};

}  // namespace

std::vector<RootBracket> isolate_roots(const BernsteinCoeffs& b, double lo, double hi,
                                       const IsolationOptions& options) {
  if (b.empty() || std::all_of(b.begin(), b.end(), [](double c) { return c == 0.0; }))
    throw RootIsolationFailure("isolate_roots: zero polynomial has no isolated roots");
  for (double c : b)
    if (!std::isfinite(c)) throw RootIsolationFailure("isolate_roots: non-finite Bernstein coefficient");
  std::vector<RootBracket> result;
  if (b.size() == 1) return result;

  if (b.front() == 0.0) result.push_back({lo, lo, false});
  Isolator iso{options.min_width, {}};
  iso.run(b, lo, hi);
  result.insert(result.end(), iso.out.begin(), iso.out.end());
  if (b.back() == 0.0) result.push_back({hi, hi, false});
  return result;
}

std::vector<RootBracket> isolate_roots(const Polynomial& p, double lo, double hi,
                                       const IsolationOptions& options) {
  if (p.is_zero()) throw RootIsolationFailure("isolate_roots: zero polynomial has no isolated roots");
  for (double c : p.coeffs())
    if (!std::isfinite(c)) throw RootIsolationFailure("isolate_roots: non-finite coefficient");
  if (p.degree() == 0) return {};
  const BernsteinCoeffs b = bernstein_from_power(p, lo, hi);
  for (double c : b)
    if (!std::isfinite(c)) throw RootIsolationFailure("isolate_roots: Bernstein conversion overflowed");
  return isolate_roots(b, lo, hi, options);
}

}  // namespace logderiv
