#include "logderiv/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "logderiv/bounds.hpp"
#include "logderiv/extremal.hpp"
#include "logderiv/quadrature.hpp"

namespace logderiv {

const char* to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::AreaIntegral: return "area";
    case ObjectiveKind::LpMeanUnweighted: return "lp";
    case ObjectiveKind::LpMeanWeighted: return "lpw";
  }
  return "?";
}

void Objective::validate() const {
  if (kind != ObjectiveKind::AreaIntegral && !(p > 0.0)) throw std::invalid_argument("Objective: p must be positive");
  if (!(tolerance > 0.0 && tolerance <= 1e-2) || !(final_tolerance > 0.0 && final_tolerance <= 1e-2))
    throw std::invalid_argument("Objective: tolerances must lie in (0, 1e-2]");
}

std::string Objective::label() const {
  if (kind == ObjectiveKind::AreaIntegral) return "area";
  std::ostringstream os;
  os << to_string(kind) << "(" << p << ")";
  return os.str();
}

PoleSet equally_spaced(std::size_t n) {
  if (n == 0) throw std::invalid_argument("equally_spaced: n must be positive");
  std::vector<double> angles;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n) angles.push_back(0.0);
    else if (2 * k == n) angles.push_back(kPi);
    else angles.push_back(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return PoleSet(std::move(angles), kAngleSnapTolerance);
}

double evaluate_objective(const PoleSet& poles, const Objective& objective, double rel_tol) {
  if (objective.kind == ObjectiveKind::AreaIntegral) return area_integral(poles, AreaOptions{rel_tol, 20000}).value;
  MeanSpec spec;
  spec.p = objective.p;
  spec.weighted = objective.kind == ObjectiveKind::LpMeanWeighted;
  spec.rel_tol = rel_tol;
  return lp_mean(poles, spec).value;
}

std::vector<double> canonical_angles(std::vector<double> angles) {
  for (double& a : angles) a = normalize_angle(a);
  std::vector<double> conj(angles);
  for (double& a : conj) a = normalize_angle(-a);
  std::sort(angles.begin(), angles.end());
  std::sort(conj.begin(), conj.end());
  return std::lexicographical_compare(conj.begin(), conj.end(), angles.begin(), angles.end()) ? conj : angles;
}

namespace {

struct SeedOutcome {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> point;
  std::size_t evaluations = 0;
  std::size_t failed = 0;
  std::size_t violations = 0;
  bool converged = false;
};

class Evaluator {
 public:
  Evaluator(std::size_t n, const Objective& objective, double gauge, SeedOutcome& out)
      : n_(n), objective_(objective), gauge_(gauge), out_(out) {
    // The weighted mean is bounded below by C_p n^(p-1) and the unweighted one dominates it.
    lower_bound_ = objective.kind == ObjectiveKind::AreaIntegral ? kIntervalAreaBound
                                                                 : theorem1_bound(objective.p, n);
  }

  [[nodiscard]] std::vector<double> angles_of(const std::vector<double>& x) const {
    std::vector<double> angles;
    if (objective_.kind == ObjectiveKind::AreaIntegral) angles.push_back(gauge_);
    angles.insert(angles.end(), x.begin(), x.end());
    return angles;
  }

  double operator()(const std::vector<double>& x) {
    ++out_.evaluations;
    double v = std::numeric_limits<double>::infinity();
    try {
      v = evaluate_objective(PoleSet(angles_of(x)), objective_, objective_.tolerance);
    } catch (const ToleranceNotMet&) {
      ++out_.failed;
      return v;
    }
    if (v < lower_bound_) ++out_.violations;
    if (v < out_.value) {
      out_.value = v;
      out_.point = x;
    }
    return v;
  }

 private:
  std::size_t n_;
  const Objective& objective_;
  double gauge_;
  SeedOutcome& out_;
  double lower_bound_ = 0.0;
};

SeedOutcome run_seed(std::size_t n, const Objective& objective, const OptimizeOptions& options, std::size_t index) {
  SeedOutcome out;
  Evaluator f(n, objective, options.gauge, out);
  const std::size_t dim = objective.kind == ObjectiveKind::AreaIntegral ? n - 1 : n;

  std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + index + 1);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<double> start(dim);
  for (double& a : start) a = uniform(rng);
  if (dim == 0) {
    f(start);
    out.converged = true;
    return out;
  }

  // Nelder-Mead with standard coefficients.
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  constexpr double kStep = 0.6;
  std::vector<std::vector<double>> simplex{start};
  for (std::size_t i = 0; i < dim; ++i) {
    auto v = start;
    v[i] += kStep;
    simplex.push_back(v);
  }
  std::vector<double> fv;
  for (const auto& v : simplex) fv.push_back(f(v));

  auto budget_left = [&] { return out.evaluations < options.budget; };
  std::vector<std::size_t> order(dim + 1);
  while (budget_left()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];

    double diameter = 0.0;
    for (const auto& v : simplex)
      for (std::size_t i = 0; i < dim; ++i) diameter = std::max(diameter, std::abs(v[i] - simplex[best][i]));
    const double spread = std::abs(fv[worst] - fv[best]);
    if (std::isfinite(fv[worst]) && spread <= objective.tolerance * std::max(1.0, std::abs(fv[best])) &&
        diameter <= 1e-4) {
      out.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k <= dim; ++k)
      if (k != worst)
        for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k][i] / static_cast<double>(dim);
    auto along = [&](double t) {
      std::vector<double> v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
      return v;
    };

    auto xr = along(-kReflect);
    const double fr = f(xr);
    if (fr < fv[best]) {
      if (!budget_left()) break;
      auto xe = along(-kExpand);
      const double fe = f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    if (!budget_left()) break;
    const bool outside = fr < fv[worst];
    auto xc = along(outside ? -kContract : kContract);
    const double fc = f(xc);
    if (fc < (outside ? fr : fv[worst])) {
      simplex[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= dim && budget_left(); ++k) {
      if (k == best) continue;
      for (std::size_t i = 0; i < dim; ++i)
        simplex[k][i] = simplex[best][i] + kShrink * (simplex[k][i] - simplex[best][i]);
      fv[k] = f(simplex[k]);
    }
  }
  return out;
}

}  // namespace

StudyRecord optimize(std::size_t n, const Objective& objective, const OptimizeOptions& options) {
  if (n == 0) throw std::invalid_argument("optimize: n must be positive");
  if (options.seeds < 1) throw std::invalid_argument("optimize: at least one seed is required");
  if (options.budget < 100) throw std::invalid_argument("optimize: budget must be at least 100 evaluations");
  objective.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<SeedOutcome> outcomes(options.seeds);
  if (options.parallel && options.seeds > 1) {
    std::vector<std::future<SeedOutcome>> futures;
    for (std::size_t s = 0; s < options.seeds; ++s)
      futures.push_back(std::async(std::launch::async, run_seed, n, std::cref(objective), std::cref(options), s));
    for (std::size_t s = 0; s < options.seeds; ++s) outcomes[s] = futures[s].get();
  } else {
    for (std::size_t s = 0; s < options.seeds; ++s) outcomes[s] = run_seed(n, objective, options, s);
  }

  StudyRecord rec;
  rec.n = n;
  rec.objective = objective;
  rec.seeds = options.seeds;
  rec.search_value = std::numeric_limits<double>::infinity();
  std::size_t best_seed = 0;
  for (std::size_t s = 0; s < outcomes.size(); ++s) {
    const SeedOutcome& o = outcomes[s];
    rec.evaluations += o.evaluations;
    rec.failed_evaluations += o.failed;
    rec.bound_violations += o.violations;
    if (o.converged) ++rec.converged_seeds;
    if (o.value < rec.search_value) {
      rec.search_value = o.value;
      best_seed = s;
    }
  }

  std::vector<double> angles;
  if (objective.kind == ObjectiveKind::AreaIntegral) angles.push_back(options.gauge);
  angles.insert(angles.end(), outcomes[best_seed].point.begin(), outcomes[best_seed].point.end());
  if (angles.empty()) angles.push_back(0.0);
  if (objective.kind == ObjectiveKind::AreaIntegral) {
    for (double& a : angles) a = normalize_angle(a);
    std::sort(angles.begin() + 1, angles.end());
  } else {
    angles = canonical_angles(std::move(angles));
  }
  rec.best_angles = angles;
  rec.best_value = evaluate_objective(PoleSet(angles), objective, objective.final_tolerance);
  rec.reference_value = evaluate_objective(equally_spaced(n), objective, objective.final_tolerance);
  rec.gap = rec.best_value - rec.reference_value;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (rec.converged_seeds == 0) throw BudgetExhausted("optimize: no seed converged within its budget", rec);
  return rec;
}

std::vector<SharpnessRow> sharpness_table(std::size_t n_max, double p, std::uint64_t seed, std::size_t random_samples) {
  if (n_max < 1 || n_max > 16) throw std::invalid_argument("sharpness_table: n_max must lie in [1, 16]");
  if (!(p > 0.0)) throw std::invalid_argument("sharpness_table: p must be positive");
  const double c_tilde = ctilde(p);
  std::vector<SharpnessRow> rows;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  for (std::size_t n = 1; n <= n_max; ++n) {
    SharpnessRow row;
    row.n = n;
    row.lower = theorem1_bound(p, n);
    row.gtilde = lp_mean_gtilde(n, p);
    row.upper = c_tilde * std::pow(static_cast<double>(n), p - 1.0);
    row.random_min = std::numeric_limits<double>::infinity();
    MeanSpec spec;
    spec.p = p;
    spec.rel_tol = 1e-6;
    for (std::size_t s = 0; s < random_samples; ++s) {
      std::vector<double> angles(n);
      for (double& a : angles) a = uniform(rng);
      row.random_min = std::min(row.random_min, lp_mean(PoleSet(std::move(angles)), spec).value);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace logderiv
