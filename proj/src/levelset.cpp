#include "logderiv/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "logderiv/bounds.hpp"
#include "logderiv/errors.hpp"

namespace logderiv {

LevelQuery::LevelQuery(double delta, std::size_t n) : delta_(delta), n_(n), threshold_(delta * static_cast<double>(n)) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("LevelQuery: delta must be positive");
  if (n == 0) throw std::invalid_argument("LevelQuery: n must be positive");
}

namespace {

/// Bisection on the sign of the Bernstein form down to min_width, then one
/// Newton step on the direct level function shifted by `level`.
double refine_root(const BernsteinCoeffs& b, const PoleSet& poles, double level, const RootBracket& br,
                   double min_width) {
  double lo = br.lo, hi = br.hi;
  if (lo == hi) return lo;
  auto sign_at = [&b](double x) {
    const double v = bernstein_eval(b, 0.5 * (x + 1.0));
    return (v > 0.0) - (v < 0.0);
  };
  const int slo = sign_at(lo);
  if (!br.cluster && slo != 0) {
    for (int it = 0; it < 200 && hi - lo > min_width; ++it) {
      const double mid = 0.5 * (lo + hi);
      const int sm = sign_at(mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo) lo = mid;
      else hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  try {
    const double f = eval_level(poles, x) - level;
    const double df = eval_level_derivative(poles, x);
    if (df != 0.0 && std::isfinite(f) && std::isfinite(df)) {
      const double polished = x - f / df;
      // Accept the Newton step only inside the isolating bracket.
      if (polished >= br.lo && polished <= br.hi) x = polished;
    }
  } catch (const PoleHit&) {
  }
  return x;
}

}  // namespace

BernsteinCoeffs level_polynomial(const PoleSet& poles, double level) {
  // One factor pair per distinct (Re z, real?) group, as in to_rational.
  struct Group {
    double a;
    double b;
    bool real;
    double count;
  };
  std::map<std::pair<double, bool>, Group> groups;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const bool real = poles.is_real_pole(k);
    auto [it, fresh] = groups.try_emplace({poles.re(k), real}, Group{poles.re(k), poles.im(k), real, 0.0});
    it->second.count += 1.0;
  }

  std::vector<BernsteinCoeffs> nums, dens;
  for (const auto& [key, g] : groups) {
    const double a = g.a, c = g.count;
    if (g.real) {
      // c x / (x - a)
      nums.push_back({-c, c});
      dens.push_back({-1.0 - a, 1.0 - a});
    } else {
      // c x (x - a) / ((x - a)^2 + b^2)
      const double b2 = g.b * g.b;
      nums.push_back({c * (1.0 + a), -c, c * (1.0 - a)});
      dens.push_back({(1.0 + a) * (1.0 + a) + b2, b2 - (1.0 - a) * (1.0 + a), (1.0 - a) * (1.0 - a) + b2});
    }
  }

  const std::size_t m = dens.size();
  // prefix[i] = D_0 ... D_{i-1}, suffix[i] = D_i ... D_{m-1}
  std::vector<BernsteinCoeffs> prefix(m + 1), suffix(m + 1);
  prefix[0] = {1.0};
  suffix[m] = {1.0};
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = bernstein_product(prefix[i], dens[i]);
  for (std::size_t i = m; i-- > 0;) suffix[i] = bernstein_product(dens[i], suffix[i + 1]);

  BernsteinCoeffs out = prefix[m];
  for (double& v : out) v *= -level;
  for (std::size_t i = 0; i < m; ++i) {
    const BernsteinCoeffs term = bernstein_product(bernstein_product(prefix[i], nums[i]), suffix[i + 1]);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += term[k];
  }
  return out;
}

IntervalUnion level_set(const PoleSet& poles, const LevelQuery& query, const IsolationOptions& options) {
  if (query.n() != poles.size()) throw std::invalid_argument("level_set: query n differs from pole count");
  const double t = query.threshold();
  std::vector<double> breaks{-1.0, 1.0};
  for (const double level : {t, -t}) {
    const BernsteinCoeffs b = level_polynomial(poles, level);
    for (const RootBracket& br : isolate_roots(b, -1.0, 1.0, options))
      breaks.push_back(std::clamp(refine_root(b, poles, level, br, options.min_width), -1.0, 1.0));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Interval> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) continue;
    if (std::abs(eval_level(poles, mid)) >= t) pieces.push_back({a, b});
  }
  return IntervalUnion(std::move(pieces));
}

IntervalUnion delta_window(std::size_t n, double delta) {
  if (n == 0) throw std::invalid_argument("delta_window: n must be positive");
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta_window: delta must lie in (0, 1/2)");
  const double width = 3.0 / ((2.0 + 4.0 * delta) * static_cast<double>(n));
  if (width >= 1.0) return IntervalUnion({{-1.0, 1.0}});
  return IntervalUnion({{-1.0, -1.0 + width}, {1.0 - width, 1.0}});
}

}  // namespace logderiv
