#include "logderiv/bernstein.hpp"

#include <cmath>

namespace logderiv {

namespace {

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Power-basis coefficients of q(u) = p(lo + (hi - lo) u).
std::vector<double> reparametrize(const Polynomial& p, double lo, double hi) {
  const auto c = p.coeffs();
  const std::size_t n = c.size();
  const double w = hi - lo;
  std::vector<double> q{c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<double> next(q.size() + 1, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j] += q[j] * lo;
      next[j + 1] += q[j] * w;
    }
    next[0] += c[i];
    q = std::move(next);
  }
  return q;
}

}  // namespace

BernsteinCoeffs bernstein_product(std::span<const double> a, std::span<const double> b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  BernsteinCoeffs out(m + n + 1, 0.0);
  std::vector<double> ca(m + 1), cb(n + 1), cc(m + n + 1);
  for (std::size_t i = 0; i <= m; ++i) ca[i] = binomial(m, i);
  for (std::size_t j = 0; j <= n; ++j) cb[j] = binomial(n, j);
  for (std::size_t k = 0; k <= m + n; ++k) cc[k] = binomial(m + n, k);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= n; ++j) out[i + j] += ca[i] * cb[j] * a[i] * b[j];
  for (std::size_t k = 0; k <= m + n; ++k) out[k] /= cc[k];
  return out;
}

double bernstein_eval(std::span<const double> b, double u) {
  std::vector<double> w(b.begin(), b.end());
  for (std::size_t r = 1; r < w.size(); ++r)
    for (std::size_t i = 0; i + r < w.size(); ++i) w[i] = (1.0 - u) * w[i] + u * w[i + 1];
  return w.empty() ? 0.0 : w[0];
}

void bernstein_split(std::span<const double> b, BernsteinCoeffs& left, BernsteinCoeffs& right) {
  const std::size_t n = b.size();
  std::vector<double> work(b.begin(), b.end());
  left.assign(n, 0.0);
  right.assign(n, 0.0);
  left[0] = work[0];
  right[n - 1] = work[n - 1];
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i + r < n; ++i) work[i] = 0.5 * (work[i] + work[i + 1]);
    left[r] = work[0];
    right[n - 1 - r] = work[n - 1 - r];
  }
}

BernsteinCoeffs bernstein_from_power(const Polynomial& p, double lo, double hi) {
  if (p.is_zero()) return {0.0};
  const std::vector<double> q = reparametrize(p, lo, hi);
  const std::size_t d = q.size() - 1;
  // b_i = sum_{j<=i} C(i,j)/C(d,j) q_j
  BernsteinCoeffs b(d + 1, 0.0);
  for (std::size_t i = 0; i <= d; ++i) {
    double ratio = 1.0;
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) {
      acc += ratio * q[j];
      if (j < i) ratio *= static_cast<double>(i - j) / static_cast<double>(d - j);
    }
    b[i] = acc;
  }
  return b;
}

}  // namespace logderiv
