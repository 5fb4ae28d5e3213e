#include <doctest.h>

#include <cmath>
#include <random>

#include "logderiv/bounds.hpp"
#include "logderiv/errors.hpp"
#include "logderiv/levelset.hpp"
#include "logderiv/roots.hpp"
#include "oracles.hpp"

using namespace logderiv;
using doctest::Approx;

namespace {

Polynomial from_roots(const std::vector<double>& roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

bool brackets_contain(const std::vector<RootBracket>& b, double r) {
  for (const auto& x : b)
    if (x.lo - 1e-12 <= r && r <= x.hi + 1e-12) return true;
  return false;
}

}  // namespace

TEST_CASE("root isolation: simple roots") {
  const auto b = isolate_roots(from_roots({0.2, 0.5, 0.8}), -1.0, 1.0);
  REQUIRE(b.size() == 3);
  for (double r : {0.2, 0.5, 0.8}) CHECK(brackets_contain(b, r));
  for (const auto& x : b) CHECK_FALSE(x.cluster);
  // a root exactly on a bisection point is reported once
  const auto on_split = isolate_roots(Polynomial{0.0, 1.0} * Polynomial{-0.5, 1.0}, -1.0, 1.0);
  REQUIRE(on_split.size() == 2);
  CHECK(on_split[0].lo == 0.0);
  CHECK(on_split[0].hi == 0.0);
  CHECK(brackets_contain(on_split, 0.5));
}

TEST_CASE("root isolation: Chebyshev T_12 has 12 roots in [-1,1]") {
  // T_{k+1} = 2x T_k - T_{k-1}
  Polynomial t0{1.0}, t1{0.0, 1.0};
  for (int k = 1; k < 12; ++k) {
    Polynomial t2 = Polynomial{0.0, 2.0} * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  const auto b = isolate_roots(t1, -1.0, 1.0);
  REQUIRE(b.size() == 12);
  for (int j = 0; j < 12; ++j) CHECK(brackets_contain(b, std::cos((2 * j + 1) * kPi / 24)));
}

TEST_CASE("root isolation: endpoints, doubles, empty, errors") {
  const auto at_end = isolate_roots(from_roots({-1.0, 0.3}), -1.0, 1.0);
  REQUIRE(at_end.size() == 2);
  CHECK(brackets_contain(at_end, -1.0));

  // a touching double root does not change sign and is not reported; a triple root is
  CHECK(isolate_roots(from_roots({0.4, 0.4}), -1.0, 1.0).empty());
  const auto triple = isolate_roots(from_roots({0.4, 0.4, 0.4}), -1.0, 1.0);
  REQUIRE_FALSE(triple.empty());
  // rounding smears a triple root over roughly eps^(1/3)
  for (const auto& x : triple) CHECK((x.lo - 1e-4 <= 0.4 && 0.4 <= x.hi + 1e-4));

  const auto close_pair = isolate_roots(from_roots({0.3, 0.3 + 1e-14}), -1.0, 1.0);
  CHECK(close_pair.size() <= 2);

  CHECK(isolate_roots(Polynomial{1.0, 0.0, 1.0}, -1.0, 1.0).empty());
  CHECK_THROWS_AS((void)isolate_roots(Polynomial{}, -1.0, 1.0), RootIsolationFailure);
  CHECK_THROWS_AS((void)isolate_roots(Polynomial{1.0, std::nan("")}, -1.0, 1.0), RootIsolationFailure);
}

TEST_CASE("property: root isolation finds every planted root") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> roots(1 + trial % 10);
    for (double& r : roots) r = u(rng);
    std::sort(roots.begin(), roots.end());
    bool separated = true;
    for (std::size_t i = 1; i < roots.size(); ++i) separated = separated && roots[i] - roots[i - 1] > 1e-6;
    if (!separated) continue;
    const auto b = isolate_roots(from_roots(roots), -1.0, 1.0);
    CHECK(b.size() == roots.size());
    for (double r : roots) CHECK(brackets_contain(b, r));
  }
}

TEST_CASE("interval unions") {
  const IntervalUnion u({{0.5, 1.0}, {-1.0, -0.5}});
  CHECK(u.size() == 2);
  CHECK(u.intervals()[0] == Interval{-1.0, -0.5});
  CHECK(measure(u) == 1.0);
  CHECK(measure(IntervalUnion{}) == 0.0);
  CHECK(measure(IntervalUnion({{0.0, 1.0}})) == 1.0);
  CHECK(IntervalUnion({{0.0, 0.5}, {0.5, 1.0}, {0.2, 0.3}}) == IntervalUnion({{0.0, 1.0}}));
  CHECK_THROWS_AS(IntervalUnion({{0.5, 0.4}}), std::invalid_argument);

  CHECK(intersect(IntervalUnion({{0.0, 1.0}}), IntervalUnion({{0.5, 1.0}})) == IntervalUnion({{0.5, 1.0}}));
  CHECK(intersect(u, IntervalUnion({{0.9, 1.0}})) == IntervalUnion({{0.9, 1.0}}));
  CHECK(intersect(IntervalUnion({{0.0, 0.1}}), IntervalUnion({{0.2, 0.3}})).empty());

  CHECK(symmetric_tails(0.75) == IntervalUnion({{-1.0, -0.75}, {0.75, 1.0}}));
  CHECK(symmetric_tails(0.0) == IntervalUnion({{-1.0, 1.0}}));
  CHECK(symmetric_tails(1.5).empty());
  CHECK(u.contains(-0.7));
  CHECK_FALSE(u.contains(0.0));
  CHECK(u.contains(IntervalUnion({{0.6, 0.9}})));
}

TEST_CASE("property: measure equals the sum of lengths and pieces stay disjoint") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> pieces;
    for (int i = 0; i < 1 + trial % 9; ++i) {
      double a = u(rng), b = u(rng);
      pieces.push_back({std::min(a, b), std::max(a, b)});
    }
    const IntervalUnion un(pieces);
    double sum = 0.0;
    for (std::size_t i = 0; i < un.size(); ++i) {
      sum += un.intervals()[i].length();
      if (i > 0) CHECK(un.intervals()[i - 1].hi < un.intervals()[i].lo);
    }
    CHECK(std::abs(un.measure() - sum) <= 1e-15);
    for (const Interval& p : pieces) CHECK(un.contains(IntervalUnion({p})));
  }
}

TEST_CASE("delta window") {
  CHECK(delta_window(1, 0.2) == IntervalUnion({{-1.0, 1.0}}));
  const IntervalUnion w = delta_window(10, 0.25);
  REQUIRE(w.size() == 2);
  CHECK(w.intervals()[0].hi == Approx(-0.9).epsilon(1e-15));
  CHECK(w.intervals()[1].lo == Approx(0.9).epsilon(1e-15));
  CHECK(delta_window(100000, 0.25).measure() < 1e-4);
  CHECK_THROWS((void)delta_window(4, 0.5));
  CHECK_THROWS((void)delta_window(4, 0.0));
}

TEST_CASE("level query validation") {
  CHECK(LevelQuery(0.25, 4).threshold() == 1.0);
  CHECK(LevelQuery(0.7, 3).in_theorem_range() == false);
  CHECK_THROWS((void)LevelQuery(0.0, 3));
  CHECK_THROWS((void)LevelQuery(-0.1, 3));
  CHECK_THROWS((void)LevelQuery(0.2, 0));
}

TEST_CASE("level set examples") {
  const PoleSet at_i({kPi / 2});
  const IntervalUnion e = level_set(at_i, LevelQuery(0.2, 1));
  REQUIRE(e.size() == 2);
  CHECK(e.intervals()[0].lo == -1.0);
  CHECK(e.intervals()[0].hi == Approx(-0.5).epsilon(1e-13));
  CHECK(e.intervals()[1].lo == Approx(0.5).epsilon(1e-13));
  CHECK(e.measure() == Approx(1.0).epsilon(1e-12));
  CHECK(level_set(at_i, LevelQuery(0.6, 1)).empty());

  // pole at 1: F = x/(x-1); |F| >= 1/4 on [-1,-1/3] and [1/5,1]
  const IntervalUnion r = level_set(PoleSet({0.0}), LevelQuery(0.25, 1));
  REQUIRE(r.size() == 2);
  CHECK(r.intervals()[0].hi == Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(r.intervals()[1].lo == Approx(0.2).epsilon(1e-12));
  CHECK(r.intervals()[1].hi == 1.0);
}

TEST_CASE("property: level sets agree with pointwise evaluation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  const double deltas[] = {0.1, 0.2, 0.3, 0.4};
  for (int trial = 0; trial < 100; ++trial) {
    auto angles = oracle::random_angles(rng, 1 + trial % 12);
    if (trial % 10 == 3) angles.push_back(0.0);
    const PoleSet poles(angles);
    const std::size_t n = poles.size();
    const double delta = deltas[trial % 4];
    const LevelQuery q(delta, n);
    const IntervalUnion e = level_set(poles, q);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const double x = ux(rng);
      if (poles.has_real_pole() && std::abs(x) == 1.0) continue;
      const double f = std::abs(eval_level(poles, x));
      if (e.contains(x) ? f < q.threshold() - 1e-9 : f >= q.threshold() + 1e-9) ++bad;
    }
    CHECK(bad == 0);
    // in-set sampling along each piece
    for (const Interval& iv : e.intervals())
      for (int i = 0; i <= 20; ++i) {
        const double x = iv.lo + (iv.hi - iv.lo) * i / 20.0;
        if (poles.has_real_pole() && std::abs(x) == 1.0) continue;
        CHECK(std::abs(eval_level(poles, x)) >= q.threshold() - 1e-9);
      }
    // independent measure estimate by sampling
    const double sampled = oracle::level_measure_sampled(angles, q.threshold(), 50000);
    CHECK(std::abs(sampled - e.measure()) <= 4e-5 * static_cast<double>(2 * e.size() + 2));
  }
}

TEST_CASE("property: level sets shrink as delta grows") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const PoleSet poles(oracle::random_angles(rng, 1 + trial % 12));
    const std::size_t n = poles.size();
    const IntervalUnion lo = level_set(poles, LevelQuery(0.1, n));
    const IntervalUnion mid = level_set(poles, LevelQuery(0.25, n));
    const IntervalUnion hi = level_set(poles, LevelQuery(0.4, n));
    CHECK(lo.contains(mid));
    CHECK(mid.contains(hi));
  }
}

TEST_CASE("property: mass of the level set near the endpoints") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const PoleSet poles(oracle::random_angles(rng, 1 + trial % 12));
    const std::size_t n = poles.size();
    for (double delta : {0.1, 0.2, 0.3, 0.4}) {
      const double mu = intersect(level_set(poles, LevelQuery(delta, n)), delta_window(n, delta)).measure();
      CHECK(mu > theorem2_constant(delta) / static_cast<double>(n));
    }
  }
}

TEST_CASE("property: level polynomials have at most 2n isolated roots in [-1,1]") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> ux(-0.999, 0.999);
  for (int trial = 0; trial < 100; ++trial) {
    const PoleSet poles(oracle::random_angles(rng, 1 + trial % 12));
    const auto rat = to_rational(poles);
    const double t = 0.25 * static_cast<double>(poles.size());
    for (double s : {1.0, -1.0}) {
      const BernsteinCoeffs b = level_polynomial(poles, s * t);
      CHECK(b.size() - 1 <= 2 * poles.size());
      CHECK(isolate_roots(b, -1.0, 1.0).size() <= b.size() - 1);
      // same polynomial as the factored form evaluated in long double
      for (int i = 0; i < 8; ++i) {
        const double x = ux(rng);
        long double den = 1.0L, num = 0.0L, mag = 0.0L;
        for (std::size_t k = 0; k < poles.size(); ++k) {
          const long double a = poles.re(k), bb = poles.im(k);
          const long double dk = (x - a) * (x - a) + bb * bb, nk = x * (x - a);
          num = num * dk + nk * den;
          den *= dk;
          mag = mag * dk + std::abs(nk) * den / dk + std::abs(nk * den / dk);
        }
        const long double ref = num - s * t * den;
        const double got = bernstein_eval(b, 0.5 * (x + 1.0));
        const long double scale = std::abs(num) + t * den + mag;
        CHECK(std::abs(static_cast<long double>(got) - ref) <= 1e-12L * scale * poles.size());
      }
    }
  }
}

TEST_CASE("Bernstein helpers") {
  const Polynomial p{0.5, -1.0, 0.0, 2.0};
  const BernsteinCoeffs b = bernstein_from_power(p, -1.0, 1.0);
  for (double x : {-1.0, -0.3, 0.0, 0.6, 1.0}) CHECK(bernstein_eval(b, 0.5 * (x + 1.0)) == Approx(p(x)));
  const Polynomial q{1.0, 1.0};
  const BernsteinCoeffs prod = bernstein_product(b, bernstein_from_power(q, -1.0, 1.0));
  for (double x : {-0.8, 0.1, 0.9}) CHECK(bernstein_eval(prod, 0.5 * (x + 1.0)) == Approx((p * q)(x)));
  BernsteinCoeffs l, r;
  bernstein_split(b, l, r);
  CHECK(bernstein_eval(l, 0.5) == Approx(p(-0.5)));
  CHECK(bernstein_eval(r, 0.5) == Approx(p(0.5)));
  // the factor x^2 - 2 a x + 1 has no negative control points on [-1,1]
  for (double a : {-0.99, -0.2, 0.5, 0.999})
    for (double c : bernstein_from_power(Polynomial::unit_quadratic(a), -1.0, 1.0)) CHECK(c >= -1e-15);
}
