#include "logderiv/certificate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "logderiv/bounds.hpp"
#include "logderiv/errors.hpp"
#include "logderiv/levelset.hpp"

namespace logderiv {

namespace {

constexpr double kBandEdgeTolerance = 1e-14;
// Relative slack for P(v; x) >= h at the closed ends of S(h).
constexpr double kLemma1Slack = 1e-12;

double cosine_of(double v_angle) {
  const double t = normalize_angle(v_angle);
  if (t == 0.0) return 1.0;
  if (t == kPi) return -1.0;
  return std::cos(t);
}

}  // namespace

LemmaParams::LemmaParams(double rho, double h) : rho_(rho), h_(h) {
  if (!(rho > 0.0 && rho <= 0.25)) throw DomainError("LemmaParams: rho must lie in (0, 1/4]");
  if (!(h >= 1.0 && h <= 1.0 / (2.0 * rho))) throw DomainError("LemmaParams: h must lie in [1, 1/(2 rho)]");
}

double threshold_T(const LemmaParams& params) {
  const double rho = params.rho();
  return std::sqrt(1.0 + rho * rho - 2.0 * rho / params.h());
}

Interval guarantee_segment(const LemmaParams& params) {
  const double rho = params.rho();
  const double h = params.h();
  const double root = std::sqrt(h * h - 2.0 * rho * h + rho * rho * h * h);
  const double offset = 1.0 - rho * h;
  return {(root - offset) / (h + 1.0), (root + offset) / (h + 1.0)};
}

Interval s_star(double rho) {
  if (!(rho > 0.0 && rho <= 0.25)) throw DomainError("s_star: rho must lie in (0, 1/4]");
  return {(std::sqrt(1.0 - 3.0 * rho * rho) - rho) / (1.0 + 2.0 * rho), 1.0 - rho};
}

bool lemma1_predicate(double v_angle, const LemmaParams& params, double x) {
  if (cosine_of(v_angle) < threshold_T(params))
    throw PreconditionViolation("lemma1_predicate: Re v is below T(h)");
  if (!guarantee_segment(params).contains(x))
    throw PreconditionViolation("lemma1_predicate: x lies outside S(h)");
  return poisson_kernel(v_angle, x) >= params.h() * (1.0 - kLemma1Slack);
}

std::pair<Interval, Interval> lemma2_window(const LemmaParams& params, double s) {
  const double rho = params.rho();
  const double h = params.h();
  if (!(s > 0.0 && s < 4.0 * h / (3.0 * rho))) throw DomainError("lemma2_window: s must lie in (0, 4h/(3 rho))");
  const double width = 3.0 * s * rho / (4.0 * h);
  return {Interval{-1.0, -1.0 + width}, Interval{1.0 - width, 1.0}};
}

PolePartition partition(const PoleSet& poles, double delta, std::size_t m) {
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("partition: delta must lie in (0, 1/2)");
  if (m < 1) throw DomainError("partition: m must be at least 1");
  const std::size_t n = poles.size();
  const double nd = static_cast<double>(n);

  PolePartition part;
  part.m = m;
  part.delta = delta;
  part.M = 2.0 + 4.0 * delta;
  part.rho = 1.0 / (2.0 * part.M * nd);
  const double h_max = 1.0 / (2.0 * part.rho);
  for (std::size_t j = 0; j <= m; ++j) {
    const double h = j == 0 ? h_max
                            : std::min(h_max, part.M * std::pow(nd, 1.0 - static_cast<double>(j) /
                                                                            static_cast<double>(m + 1)));
    part.h_table.push_back(h);
    part.threshold_table.push_back(threshold_T(LemmaParams(part.rho, h)));
  }

  part.classes.assign(m + 2, {});
  part.signed_counts.assign(m + 2, {});
  for (std::size_t k = 0; k < n; ++k) {
    const double re = poles.re(k);
    const double a = std::abs(re);
    std::size_t cls = m + 1;
    if (a >= part.threshold_table[0]) {
      cls = 0;
    } else {
      for (std::size_t j = 1; j <= m; ++j) {
        if (a >= part.threshold_table[j]) {
          cls = j;
          break;
        }
      }
    }
    part.classes[cls].push_back(k);
    auto& c = part.signed_counts[cls];
    if (re > 0.0) ++c.positive;
    else if (re < 0.0) ++c.negative;
    else ++c.zero;
    for (double edge : part.threshold_table) {
      if (std::abs(a - edge) <= kBandEdgeTolerance) {
        part.near_edge.push_back(k);
        break;
      }
    }
  }
  return part;
}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1Plus: return "Case1Plus";
    case CaseTag::Case1Minus: return "Case1Minus";
    case CaseTag::Case2: return "Case2";
  }
  return "?";
}

Certificate theorem2_witness(const PoleSet& poles, double delta, std::size_t m) {
  const PolePartition part = partition(poles, delta, m);
  const std::size_t n = poles.size();
  const double nd = static_cast<double>(n);

  Certificate cert;
  cert.n = n;
  cert.m = m;
  cert.delta = delta;
  cert.rho = part.rho;
  cert.M = part.M;
  cert.h_table = part.h_table;
  cert.guarantee = delta * nd;
  cert.near_edge = part.near_edge;

  long double sum = 0.0L, sum_plus = 0.0L, sum_minus = 0.0L;
  for (std::size_t j = 0; j <= m; ++j) {
    const long double scale = std::pow(static_cast<long double>(nd), static_cast<long double>(j) / (m + 1));
    const auto& counts = part.signed_counts[j];
    AlphaRow row;
    row.alpha = static_cast<double>(part.classes[j].size() / scale);
    row.plus = static_cast<double>(counts.positive / scale);
    row.minus = static_cast<double>(counts.negative / scale);
    sum += part.classes[j].size() / scale;
    sum_plus += counts.positive / scale;
    sum_minus += counts.negative / scale;
    cert.alpha_table.push_back(row);
  }

  if (sum >= 1.0L) {
    const Interval s = s_star(part.rho);
    // Positive side on ties; if rounding leaves both sums below 1/2, the larger one.
    const bool plus = sum_plus >= 0.5L || (sum_minus < 0.5L && sum_plus >= sum_minus);
    cert.case_tag = plus ? CaseTag::Case1Plus : CaseTag::Case1Minus;
    cert.witness = plus ? IntervalUnion({s}) : IntervalUnion({{-s.hi, -s.lo}});
    cert.guaranteed_measure = s.length();
  } else {
    const double K = theorem2_constant(delta);
    const double exponent = 1.0 + 1.0 / static_cast<double>(m + 1);
    const double width = K / (2.0 * std::pow(nd, exponent));
    cert.case_tag = CaseTag::Case2;
    cert.witness = IntervalUnion({{-1.0, -1.0 + width}, {1.0 - width, 1.0}});
    cert.guaranteed_measure = 2.0 * width;
  }
  return cert;
}

CertificateCheck verify_certificate(const PoleSet& poles, const Certificate& cert, std::size_t samples) {
  if (samples < 100) throw PreconditionViolation("verify_certificate: at least 100 samples are required");
  CertificateCheck check;
  auto fail = [&check](const std::string& msg) {
    check.passed = false;
    check.diagnostic = msg;
    return check;
  };
  const std::size_t n = poles.size();
  const double level = cert.delta * static_cast<double>(n);
  if (cert.n != n) return fail("pole count differs from the certificate");
  if (cert.guarantee != level) return fail("recorded guarantee differs from delta n");

  if (cert.witness.empty()) {
    check.passed = true;
    check.degenerate = true;
    check.diagnostic = "empty witness: vacuously true";
    return check;
  }

  const bool strict = cert.case_tag == CaseTag::Case2;
  for (const Interval& piece : cert.witness.intervals()) {
    for (std::size_t i = 0; i <= samples + 1; ++i) {
      const double x = i == samples + 1
                           ? piece.hi
                           : piece.lo + piece.length() * static_cast<double>(i) / static_cast<double>(samples + 1);
      double f = 0.0;
      try {
        f = std::abs(eval_level(poles, x));
      } catch (const PoleHit&) {
        continue;  // |F| is unbounded at a real pole
      }
      const bool ok = strict ? f > level : f >= level - 1e-9;
      if (!ok) {
        std::ostringstream os;
        os.precision(17);
        os << "|F(" << x << ")| = " << f << (strict ? " <= " : " < ") << level;
        return fail(os.str());
      }
    }
  }

  if (!delta_window(n, cert.delta).contains(cert.witness)) return fail("witness is not inside the endpoint window");
  if (std::abs(cert.witness.measure() - cert.guaranteed_measure) > 1e-12)
    return fail("guaranteed measure differs from the witness measure");
  if (strict) {
    const double expected = theorem2_constant(cert.delta) /
                            std::pow(static_cast<double>(n), 1.0 + 1.0 / static_cast<double>(cert.m + 1));
    if (std::abs(cert.guaranteed_measure - expected) > 1e-12 * std::max(1.0, expected))
      return fail("Case2 measure differs from K/n^(1+1/(m+1))");
  } else if (!(cert.guaranteed_measure > 1.25 * cert.rho)) {
    return fail("Case1 witness is not longer than 5 rho/4");
  }
  check.passed = true;
  return check;
}

}  // namespace logderiv
