#pragma once

#include <vector>

#include "logderiv/bernstein.hpp"
#include "logderiv/polynomial.hpp"

namespace logderiv {

struct IsolationOptions {
  /// Resolution of the bisection: a subinterval this narrow that still shows
  /// two or more sign variations is reported as a cluster.
  double min_width = 1e-12;
};

/// An interval known to contain the roots it stands for. `cluster` marks a
/// bracket narrower than min_width on which the sign-variation bound is
/// still >= 2 (a multiple root or roots closer than the resolution).
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  bool cluster = false;
};

/// Isolate the real roots of p in [lo, hi] by sign-variation counting on
/// Bernstein coefficients with de Casteljau bisection. Each bracket holds
/// exactly one sign change; even-multiplicity roots where p only touches
/// zero are invisible to the count and are not reported. Roots exactly at lo
/// or hi are reported as degenerate brackets. Throws RootIsolationFailure
/// for the zero polynomial or non-finite coefficients.
[[nodiscard]] std::vector<RootBracket> isolate_roots(const Polynomial& p, double lo, double hi,
                                                     const IsolationOptions& options = {});

/// Same, for a polynomial already given by Bernstein coefficients on [lo, hi].
/// An all-zero coefficient vector counts as the zero polynomial.
[[nodiscard]] std::vector<RootBracket> isolate_roots(const BernsteinCoeffs& b, double lo, double hi,
                                                     const IsolationOptions& options = {});

}  // namespace logderiv
