#include "logderiv/polynorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logderiv/errors.hpp"

namespace logderiv {

DiskPolynomial::DiskPolynomial(std::vector<Complex> zeros, Complex leading)
    : zeros_(std::move(zeros)), leading_(leading) {
  if (zeros_.empty()) throw std::invalid_argument("DiskPolynomial: at least one zero is required");
  if (leading_ == Complex{0.0, 0.0}) throw std::invalid_argument("DiskPolynomial: leading coefficient is zero");
  for (Complex& z : zeros_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("DiskPolynomial: non-finite zero");
    const double r = std::abs(z);
    if (r > 1.0 + kZeroSnapTolerance) throw std::invalid_argument("DiskPolynomial: zero outside the closed unit disk");
    if (r > 1.0) z /= r;
    if (std::abs(z.imag()) <= kZeroSnapTolerance) z = {z.real(), 0.0};
  }
}

Complex DiskPolynomial::operator()(double x) const {
  Complex acc = leading_;
  for (const Complex& z : zeros_) acc *= (x - z);
  return acc;
}

Complex DiskPolynomial::derivative(double x) const {
  const bool at_zero = std::any_of(zeros_.begin(), zeros_.end(), [x](const Complex& z) { return x - z == Complex{}; });
  if (!at_zero) {
    Complex s{};
    for (const Complex& z : zeros_) s += 1.0 / (x - z);
    return (*this)(x)*s;
  }
  Complex total{};
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    Complex term = leading_;
    for (std::size_t j = 0; j < zeros_.size(); ++j)
      if (j != k) term *= (x - zeros_[j]);
    total += term;
  }
  return total;
}

namespace {

double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  double best = std::max({f(a), f(b), fc, fd});
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      best = std::max(best, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      best = std::max(best, fd);
    }
  }
  return best;
}

}  // namespace

double sup_on_interval(const std::function<double(double)>& f, std::size_t degree) {
  const std::size_t count = 8 * (degree + 1);
  std::vector<double> xs(count);
  for (std::size_t j = 0; j < count; ++j)
    xs[j] = -std::cos(kPi * static_cast<double>(j) / static_cast<double>(count - 1));
  xs.front() = -1.0;
  xs.back() = 1.0;
  std::vector<double> fs(count);
  for (std::size_t j = 0; j < count; ++j) fs[j] = f(xs[j]);

  double best = *std::max_element(fs.begin(), fs.end());
  for (std::size_t j = 0; j < count; ++j) {
    const bool left_ok = j == 0 || fs[j] >= fs[j - 1];
    const bool right_ok = j + 1 == count || fs[j] >= fs[j + 1];
    if (!(left_ok && right_ok)) continue;
    const double a = xs[j == 0 ? 0 : j - 1];
    const double b = xs[j + 1 == count ? j : j + 1];
    best = std::max(best, golden_max(f, a, b, 1e-12));
  }
  return best;
}

double cheb_norm(const DiskPolynomial& p, NormOf which) {
  if (which == NormOf::Value) return sup_on_interval([&p](double x) { return std::abs(p(x)); }, p.degree());
  return sup_on_interval([&p](double x) { return std::abs(p.derivative(x)); }, p.degree());
}

NormReport verify_cor1(const DiskPolynomial& p) {
  NormReport r;
  r.norm = cheb_norm(p, NormOf::Value);
  r.derivative_norm = cheb_norm(p, NormOf::Derivative);
  r.factor = 0.25;
  r.holds = r.derivative_norm >= r.factor * r.norm - 1e-10;
  return r;
}

ZeroCounts count_zeros(const DiskPolynomial& p) {
  ZeroCounts c;
  for (const Complex& z : p.zeros()) {
    if (z.imag() > 0.0) ++c.plus;
    else if (z.imag() < 0.0) ++c.minus;
    else ++c.zero;
  }
  return c;
}

double cor2_factor(const ZeroCounts& counts) {
  const double hi = static_cast<double>(std::max(counts.plus, counts.minus) + counts.zero);
  const double lo = static_cast<double>(std::min(counts.plus, counts.minus));
  return std::max(0.25, std::sqrt(hi / (2.0 * lo + 1.0)) / 900.0);
}

Cor2Report verify_cor2(const DiskPolynomial& p) {
  Cor2Report r;
  r.counts = count_zeros(p);
  r.norms.norm = cheb_norm(p, NormOf::Value);
  r.norms.derivative_norm = cheb_norm(p, NormOf::Derivative);
  r.norms.factor = cor2_factor(r.counts);
  r.norms.holds = r.norms.derivative_norm >= r.norms.factor * r.norms.norm - 1e-10;
  return r;
}

double endpoint_ratio(const DiskPolynomial& p, double at) {
  if (at != 1.0 && at != -1.0) throw std::invalid_argument("endpoint_ratio: at must be +1 or -1");
  const Complex value = p(at);
  if (value == Complex{}) throw ZeroAtEndpoint("endpoint_ratio: p vanishes at the endpoint");
  return std::abs(p.derivative(at) / value);
}

GDeltaReport g_delta_positivity(const DiskPolynomial& p, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("g_delta_positivity: delta must lie in (0, 1/2)");
  const double level = delta * static_cast<double>(p.degree());
  auto phi = [&p, level](double x) { return std::abs(p.derivative(x)) - level * std::abs(p(x)); };

  auto half_measure = [&phi](double lo, double hi) {
    constexpr std::size_t kGrid = 4096;
    double total = 0.0;
    double x0 = lo;
    double f0 = phi(x0);
    for (std::size_t i = 1; i < kGrid; ++i) {
      const double x1 = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kGrid - 1);
      const double f1 = phi(x1);
      const bool in0 = f0 >= 0.0, in1 = f1 >= 0.0;
      if (in0 && in1) {
        total += x1 - x0;
      } else if (in0 != in1) {
        double a = x0, b = x1;
        for (int it = 0; it < 60; ++it) {
          const double m = 0.5 * (a + b);
          if ((phi(m) >= 0.0) == in0) a = m;
          else b = m;
        }
        const double root = 0.5 * (a + b);
        total += in0 ? root - x0 : x1 - root;
      }
      x0 = x1;
      f0 = f1;
    }
    return total;
  };

  GDeltaReport r;
  r.delta = delta;
  r.measure_negative = half_measure(-1.0, 0.0);
  r.measure_positive = half_measure(0.0, 1.0);
  return r;
}

}  // namespace logderiv
