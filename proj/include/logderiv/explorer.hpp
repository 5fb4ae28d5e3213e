#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "logderiv/poles.hpp"

namespace logderiv {

enum class ObjectiveKind { AreaIntegral, LpMeanUnweighted, LpMeanWeighted };

[[nodiscard]] const char* to_string(ObjectiveKind kind);

struct Objective {
  ObjectiveKind kind = ObjectiveKind::AreaIntegral;
  double p = 1.0;                 ///< exponent for the L_p kinds
  double tolerance = 1e-6;        ///< quadrature rel_tol during the search
  double final_tolerance = 1e-9;  ///< rel_tol for the incumbent and the reference

  void validate() const;
  [[nodiscard]] std::string label() const;
};

/// z_k = exp(2 pi i k / n), k = 1..n.
[[nodiscard]] PoleSet equally_spaced(std::size_t n);

/// Objective value of a pole configuration at the given quadrature tolerance.
[[nodiscard]] double evaluate_objective(const PoleSet& poles, const Objective& objective, double rel_tol);

struct OptimizeOptions {
  std::size_t seeds = 8;
  std::size_t budget = 400;  ///< objective evaluations per seed
  std::uint64_t seed = 0;
  double gauge = 0.0;  ///< theta_1 for the rotation-invariant area objective
  bool parallel = true;
};

struct StudyRecord {
  std::size_t n = 0;
  Objective objective;
  double best_value = 0.0;    ///< incumbent re-evaluated at final_tolerance
  double search_value = 0.0;  ///< smallest value seen during the search
  std::vector<double> best_angles;
  double reference_value = 0.0;  ///< equally spaced poles at final_tolerance
  double gap = 0.0;              ///< best_value - reference_value
  std::size_t seeds = 0;
  std::size_t evaluations = 0;
  std::size_t converged_seeds = 0;
  std::size_t failed_evaluations = 0;  ///< quadrature failures, scored as +inf
  std::size_t bound_violations = 0;    ///< evaluations below the proven lower bound
  double wall_seconds = 0.0;
};

/// Raised when no seed converges within its budget; carries the best-so-far record.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, StudyRecord record)
      : std::runtime_error(what), record_(std::move(record)) {}
  [[nodiscard]] const StudyRecord& record() const { return record_; }

 private:
  StudyRecord record_;
};

/// Multistart Nelder-Mead over the angle torus. The area objective fixes
/// theta_1 = gauge; the interval objectives leave all n angles free and report
/// the canonical representative under theta -> -theta. Every evaluation is
/// checked against the proven lower bound. Deterministic for a fixed seed.
[[nodiscard]] StudyRecord optimize(std::size_t n, const Objective& objective, const OptimizeOptions& options = {});

struct SharpnessRow {
  std::size_t n = 0;
  double lower = 0.0;       ///< C_p n^(p-1)
  double gtilde = 0.0;      ///< int |g~_n|^p
  double upper = 0.0;       ///< C~_p n^(p-1)
  double random_min = 0.0;  ///< smallest int |g_n|^p over random configurations
};

/// Rows n = 1..n_max (n_max <= 16) of the order-sharpness sandwich.
[[nodiscard]] std::vector<SharpnessRow> sharpness_table(std::size_t n_max, double p, std::uint64_t seed = 0,
                                                        std::size_t random_samples = 32);

/// theta -> -theta representative: sorted angles, lexicographically smaller
/// of the configuration and its conjugate.
[[nodiscard]] std::vector<double> canonical_angles(std::vector<double> angles);

}  // namespace logderiv
