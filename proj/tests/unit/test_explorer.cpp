#include <doctest.h>

#include <cmath>

#include "logderiv/bounds.hpp"
#include "logderiv/explorer.hpp"
#include "logderiv/extremal.hpp"
#include "logderiv/quadrature.hpp"

using namespace logderiv;
using doctest::Approx;

TEST_CASE("equally spaced poles") {
  CHECK(equally_spaced(1) == PoleSet({0.0}));
  const PoleSet two = equally_spaced(2);
  CHECK(two.angle(0) == kPi);
  CHECK(two.angle(1) == 0.0);
  const PoleSet three = equally_spaced(3);
  CHECK(three.angle(0) == Approx(kTwoPi / 3));
  CHECK(three.angle(1) == Approx(2 * kTwoPi / 3));
  CHECK(three.angle(2) == 0.0);
  CHECK(equally_spaced(4).has_real_pole());
  CHECK_THROWS((void)equally_spaced(0));
}

TEST_CASE("objective validation and evaluation") {
  Objective o;
  CHECK(o.label() == "area");
  o.kind = ObjectiveKind::LpMeanWeighted;
  o.p = 0.0;
  CHECK_THROWS(o.validate());
  o.p = 1.5;
  CHECK_NOTHROW(o.validate());
  o.tolerance = 0.5;
  CHECK_THROWS(o.validate());

  const PoleSet poles({0.7, 2.9, 4.4});
  Objective area;
  CHECK(evaluate_objective(poles, area, 1e-7) == Approx(area_integral(poles, AreaOptions{1e-7, 20000}).value));
  Objective lp;
  lp.kind = ObjectiveKind::LpMeanUnweighted;
  lp.p = 2.0;
  MeanSpec spec;
  spec.p = 2.0;
  CHECK(evaluate_objective(poles, lp, 1e-8) == Approx(lp_mean(poles, spec).value));
}

TEST_CASE("canonical angles quotient conjugation and ordering") {
  const std::vector<double> a{0.4, 5.0, 2.0};
  std::vector<double> conj;
  for (double t : a) conj.push_back(normalize_angle(-t));
  const auto ca = canonical_angles(a);
  const auto cb = canonical_angles(conj);
  REQUIRE(ca.size() == cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i) CHECK(ca[i] == Approx(cb[i]).epsilon(1e-12));  // -(-t) can move an ulp
  CHECK(std::is_sorted(ca.begin(), ca.end()));
}

TEST_CASE("single pole: every configuration is the reference") {
  Objective o;
  OptimizeOptions opts;
  opts.seeds = 2;
  opts.budget = 100;
  const StudyRecord r = optimize(1, o, opts);
  CHECK(std::abs(r.gap) <= 2 * o.tolerance * r.reference_value);
  CHECK(r.reference_value == Approx(4.0).epsilon(1e-8));
  CHECK(r.bound_violations == 0);
}

TEST_CASE("two poles: no configuration below equally spaced") {
  Objective o;
  OptimizeOptions opts;
  opts.seeds = 4;
  opts.budget = 200;
  const StudyRecord r = optimize(2, o, opts);
  CHECK(r.gap >= -1e-4);
  CHECK(r.best_value <= r.search_value + 1e-5 * r.best_value);
  CHECK(r.converged_seeds >= 1);
  CHECK(r.bound_violations == 0);
}

TEST_CASE("weighted L1 objective never drops below the proven bound") {
  Objective o;
  o.kind = ObjectiveKind::LpMeanWeighted;
  o.p = 1.0;
  OptimizeOptions opts;
  opts.seeds = 3;
  opts.budget = 300;
  StudyRecord r;
  try {
    r = optimize(3, o, opts);
  } catch (const BudgetExhausted& e) {
    r = e.record();
  }
  CHECK(r.best_value >= 1.0 / 192.0);
  CHECK(r.search_value >= 1.0 / 192.0);
  CHECK(r.bound_violations == 0);
  CHECK(r.best_angles.size() == 3);
}

TEST_CASE("optimization is reproducible and independent of scheduling") {
  Objective o;
  o.kind = ObjectiveKind::LpMeanUnweighted;
  o.p = 0.5;
  OptimizeOptions opts;
  opts.seeds = 3;
  opts.budget = 150;
  opts.seed = 42;
  auto run = [&](bool parallel) {
    opts.parallel = parallel;
    try {
      return optimize(2, o, opts);
    } catch (const BudgetExhausted& e) {
      return e.record();
    }
  };
  const StudyRecord a = run(true), b = run(false), c = run(true);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_angles == b.best_angles);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.best_angles == c.best_angles);
}

TEST_CASE("optimizer argument checks") {
  Objective o;
  OptimizeOptions opts;
  opts.budget = 50;
  CHECK_THROWS((void)optimize(2, o, opts));
  opts.budget = 200;
  opts.seeds = 0;
  CHECK_THROWS((void)optimize(2, o, opts));
  opts.seeds = 1;
  CHECK_THROWS((void)optimize(0, o, opts));
}

TEST_CASE("sharpness table brackets the extremal family") {
  for (double p : {0.5, 1.0, 2.0}) {
    const auto rows = sharpness_table(6, p, 3, 4);
    REQUIRE(rows.size() == 6);
    for (const SharpnessRow& r : rows) {
      const double nn = static_cast<double>(r.n);
      CHECK(r.lower == Approx(theorem1_constant(p) * std::pow(nn, p - 1)));
      CHECK(r.lower < r.gtilde);
      CHECK(r.gtilde <= r.upper * (1 + 1e-12));
      CHECK(r.random_min >= r.lower);
      if (p == 2.0) CHECK(r.lower == Approx(nn / 800.0));
      if (p == 1.0) CHECK(r.upper == Approx(2.0 * std::log(1.0 + std::sqrt(2.0))));
    }
    if (p == 0.5)
      for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].gtilde < rows[i - 1].gtilde);
  }
  CHECK_THROWS((void)sharpness_table(17, 1.0));
}
