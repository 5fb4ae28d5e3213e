#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logderiv/intervals.hpp"
#include "logderiv/poles.hpp"

namespace logderiv {

/// rho in (0, 1/4], h in [1, 1/(2 rho)].
class LemmaParams {
 public:
  /// Throws DomainError outside the admissible ranges.
  LemmaParams(double rho, double h);

  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] double h() const { return h_; }

 private:
  double rho_;
  double h_;
};

/// T(h) = sqrt(1 + rho^2 - 2 rho / h).
[[nodiscard]] double threshold_T(const LemmaParams& params);

/// S(h) = [x_-, x_+], x_+- = (sqrt(h^2 - 2 rho h + rho^2 h^2) +- (1 - rho h))/(h + 1).
/// Every v with Re v >= T(h) has P(v; x) >= h on S(h).
[[nodiscard]] Interval guarantee_segment(const LemmaParams& params);

/// S* = [(sqrt(1 - 3 rho^2) - rho)/(1 + 2 rho), 1 - rho], the intersection of
/// S(h) over h in [1, 1/(2 rho)]. Throws DomainError unless rho in (0, 1/4].
[[nodiscard]] Interval s_star(double rho);

/// P(v; x) >= h. Throws PreconditionViolation if cos v < T(h) or x is outside S(h).
[[nodiscard]] bool lemma1_predicate(double v_angle, const LemmaParams& params, double x);

/// The two end segments [-1, -1 + 3 s rho/(4h)] and [1 - 3 s rho/(4h), 1] on
/// which P(v; x) < s whenever |Re v| < T(h). Requires 0 < s < 4h/(3 rho).
[[nodiscard]] std::pair<Interval, Interval> lemma2_window(const LemmaParams& params, double s);

enum class SignClass { Positive, Negative, Zero };

/// Split of the poles into threshold bands I_0, ..., I_{m+1} by |Re z_k|.
struct PolePartition {
  std::size_t m = 0;
  double delta = 0.0;
  double M = 0.0;    ///< 2 + 4 delta
  double rho = 0.0;  ///< 1/(2 M n)
  std::vector<double> h_table;          ///< h_j = M n^(1 - j/(m+1)), j = 0..m
  std::vector<double> threshold_table;  ///< T(h_j), j = 0..m
  std::vector<std::vector<std::size_t>> classes;  ///< m + 2 index sets
  struct Counts {
    std::size_t positive = 0, negative = 0, zero = 0;
  };
  std::vector<Counts> signed_counts;
  /// Poles whose |Re z_k| lies within 1e-14 of a band edge.
  std::vector<std::size_t> near_edge;
};

/// Level-set band classification for 0 < delta < 1/2 and m >= 1, with
/// epsilon_j = 1/(m+1).
[[nodiscard]] PolePartition partition(const PoleSet& poles, double delta, std::size_t m);

enum class CaseTag { Case1Plus, Case1Minus, Case2 };

[[nodiscard]] const char* to_string(CaseTag tag);

struct AlphaRow {
  double alpha = 0.0;
  double plus = 0.0;
  double minus = 0.0;
};

struct Certificate {
  CaseTag case_tag = CaseTag::Case2;
  std::size_t n = 0;
  std::size_t m = 0;
  double delta = 0.0;
  double rho = 0.0;
  double M = 0.0;
  std::vector<double> h_table;
  std::vector<AlphaRow> alpha_table;
  IntervalUnion witness;
  double guarantee = 0.0;  ///< delta n
  double guaranteed_measure = 0.0;
  std::vector<std::size_t> near_edge;
};

/// Constructive level-set certificate: Case 1 when sum_j alpha_j >= 1 (the
/// witness is S*(rho) on the side whose alpha sum reaches 1/2, positive on
/// ties), Case 2 otherwise (the witness is |x| >= 1 - K/(2 n^(1 + 1/(m+1)))).
[[nodiscard]] Certificate theorem2_witness(const PoleSet& poles, double delta, std::size_t m = 3);

struct CertificateCheck {
  bool passed = false;
  bool degenerate = false;
  std::string diagnostic;
};

/// Independent audit: re-evaluates |F| at `samples` equispaced points of each
/// witness piece (plus its endpoints), checks witness inside the endpoint
/// window and the recorded measure. Requires samples >= 100.
[[nodiscard]] CertificateCheck verify_certificate(const PoleSet& poles, const Certificate& cert,
                                                  std::size_t samples = 1000);

}  // namespace logderiv
