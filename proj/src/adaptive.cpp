#include "logderiv/adaptive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "logderiv/summation.hpp"

namespace logderiv {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  std::size_t fn;
  double lo, hi;
  double value;
  double error;
  bool splittable;
};

Panel gauss_kronrod(const Integrand& f, std::size_t fn, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double ahalf = std::abs(half);
  resk *= half;
  resg *= half;
  resabs *= ahalf;
  resasc *= ahalf;
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(err, 50.0 * kEps * resabs);

  const double mid = center;
  const bool splittable = mid > lo && mid < hi && (hi - lo) > 4.0 * kEps * std::max(std::abs(lo), std::abs(hi));
  return {fn, lo, hi, resk, err, splittable};
}

struct ByError {
  const std::vector<Panel>* panels;
  bool operator()(std::size_t a, std::size_t b) const {
    const Panel& pa = (*panels)[a];
    const Panel& pb = (*panels)[b];
    if (pa.error != pb.error) return pa.error < pb.error;
    return a > b;
  }
};

}  // namespace

QuadratureResult integrate_segments(std::span<const Integrand> integrands, std::span<const Segment> segments,
                                    const AdaptiveOptions& options) {
  std::vector<Panel> panels;
  panels.reserve(std::min<std::size_t>(options.max_panels, 4 * segments.size() + 64));
  std::vector<bool> alive;
  std::size_t evals = 0;
  long double total_value = 0.0L, total_error = 0.0L;

  for (const Segment& s : segments) {
    if (!(s.hi > s.lo)) continue;
    panels.push_back(gauss_kronrod(integrands[s.fn], s.fn, s.lo, s.hi));
    alive.push_back(true);
    evals += 15;
    total_value += panels.back().value;
    total_error += panels.back().error;
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, ByError> heap(ByError{&panels});
  for (std::size_t i = 0; i < panels.size(); ++i)
    if (panels[i].splittable) heap.push(i);

  std::size_t live_count = panels.size();
  bool converged = false;
  const auto target = [&]() {
    return std::max(options.abs_tol, options.rel_tol * static_cast<double>(std::abs(total_value)));
  };
  while (true) {
    if (static_cast<double>(total_error) <= target()) {
      converged = true;
      break;
    }
    if (heap.empty() || live_count + 1 > options.max_panels) break;
    const std::size_t idx = heap.top();
    heap.pop();
    const Panel parent = panels[idx];
    alive[idx] = false;
    const double mid = 0.5 * (parent.lo + parent.hi);
    Panel left = gauss_kronrod(integrands[parent.fn], parent.fn, parent.lo, mid);
    Panel right = gauss_kronrod(integrands[parent.fn], parent.fn, mid, parent.hi);
    evals += 30;
    total_value += static_cast<long double>(left.value) + right.value - parent.value;
    total_error += static_cast<long double>(left.error) + right.error - parent.error;
    for (Panel* child : {&left, &right}) {
      panels.push_back(*child);
      alive.push_back(true);
      if (child->splittable) heap.push(panels.size() - 1);
    }
    ++live_count;
  }

  std::vector<Panel> live;
  live.reserve(live_count);
  for (std::size_t i = 0; i < panels.size(); ++i)
    if (alive[i]) live.push_back(panels[i]);
  std::sort(live.begin(), live.end(), [](const Panel& a, const Panel& b) {
    return a.fn < b.fn || (a.fn == b.fn && a.lo < b.lo);
  });
  std::vector<double> values, errors;
  values.reserve(live.size());
  errors.reserve(live.size());
  for (const Panel& p : live) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }
  QuadratureResult result;
  result.value = pairwise_sum<double>(values);
  result.error_estimate = pairwise_sum<double>(errors);
  result.panels = live.size();
  result.function_evals = evals;
  if (!std::isfinite(result.value))
    throw ToleranceNotMet("integrate: non-finite integrand value", result);
  if (!converged && result.error_estimate > std::max(options.abs_tol, options.rel_tol * std::abs(result.value)))
    throw ToleranceNotMet("integrate: tolerance not met within the panel budget", result);
  return result;
}

QuadratureResult integrate(const Integrand& f, double lo, double hi, const AdaptiveOptions& options,
                           std::span<const double> breaks) {
  std::vector<double> pts{lo, hi};
  for (double b : breaks)
    if (b > lo && b < hi) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({0, pts[i], pts[i + 1]});
  const std::array<Integrand, 1> fns{f};
  return integrate_segments(fns, segs, options);
}

}  // namespace logderiv
