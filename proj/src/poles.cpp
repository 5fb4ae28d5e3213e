#include "logderiv/poles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "logderiv/errors.hpp"
#include "logderiv/summation.hpp"

namespace logderiv {

namespace {

constexpr std::size_t kPairwiseThreshold = 64;
constexpr double kZeroCosine = 1e-15;

double sum_terms(std::vector<double>& terms) {
  if (terms.size() > kPairwiseThreshold) return pairwise_sum<double>(terms);
  double acc = 0.0;
  for (double t : terms) acc += t;
  return acc;
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError(std::string(what) + ": x must lie in [-1, 1]");
}

}  // namespace

double normalize_angle(double theta, double snap) {
  if (!std::isfinite(theta)) throw std::invalid_argument("normalize_angle: non-finite angle");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  if (snap > 0.0) {
    if (t <= snap || kTwoPi - t <= snap) t = 0.0;
    else if (std::abs(t - kPi) <= snap) t = kPi;
  }
  return t;
}

PoleSet::PoleSet(std::vector<double> angles, double snap) : angles_(std::move(angles)) {
  if (angles_.empty()) throw std::invalid_argument("PoleSet: at least one pole is required");
  re_.resize(angles_.size());
  im_.resize(angles_.size());
  for (std::size_t k = 0; k < angles_.size(); ++k) {
    angles_[k] = normalize_angle(angles_[k], snap);
    const double t = angles_[k];
    if (t == 0.0) {
      re_[k] = 1.0;
      im_[k] = 0.0;
    } else if (t == kPi) {
      re_[k] = -1.0;
      im_[k] = 0.0;
    } else {
      const double c = std::cos(t);
      re_[k] = std::abs(c) < kZeroCosine ? 0.0 : c;
      im_[k] = std::sin(t);
    }
  }
}

bool PoleSet::is_real_pole(std::size_t k) const { return angles_[k] == 0.0 || angles_[k] == kPi; }

bool PoleSet::has_real_pole() const {
  return std::any_of(angles_.begin(), angles_.end(), [](double t) { return t == 0.0 || t == kPi; });
}

PoleSet PoleSet::rotated(double phi) const {
  std::vector<double> out(angles_);
  for (double& t : out) t += phi;
  return PoleSet(std::move(out));
}

PoleSet PoleSet::conjugated() const {
  std::vector<double> out(angles_);
  for (double& t : out) t = -t;
  return PoleSet(std::move(out));
}

Complex eval_logderiv(const PoleSet& poles, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const Complex d = z - poles.point(k);
    if (d.real() == 0.0 && d.imag() == 0.0) throw PoleHit("eval_logderiv: z coincides with a pole");
    acc += 1.0 / d;
  }
  return acc;
}

double eval_level(const PoleSet& poles, double x) {
  require_unit_interval(x, "eval_level");
  std::vector<double> terms(poles.size());
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const double a = poles.re(k);
    if (poles.is_real_pole(k)) {
      if (x == a) throw PoleHit("eval_level: x is a real pole");
      terms[k] = x / (x - a);
    } else {
      const double u = x - a;
      const double b = poles.im(k);
      terms[k] = x * u / (u * u + b * b);
    }
  }
  return sum_terms(terms);
}

double eval_level_derivative(const PoleSet& poles, double x) {
  require_unit_interval(x, "eval_level_derivative");
  std::vector<double> terms(poles.size());
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const double a = poles.re(k);
    if (poles.is_real_pole(k)) {
      if (x == a) throw PoleHit("eval_level_derivative: x is a real pole");
      const double u = x - a;
      terms[k] = -a / (u * u);
    } else {
      const double u = x - a;
      const double b = poles.im(k);
      const double den = u * u + b * b;
      terms[k] = ((u + x) * den - x * u * 2.0 * u) / (den * den);
    }
  }
  return sum_terms(terms);
}

double poisson_kernel(double v_angle, double x) {
  require_unit_interval(x, "poisson_kernel");
  const double t = normalize_angle(v_angle);
  double c = t == 0.0 ? 1.0 : (t == kPi ? -1.0 : std::cos(t));
  if (std::abs(c) < kZeroCosine) c = 0.0;
  if ((x == 1.0 || x == -1.0) && c == x) throw PoleHit("poisson_kernel: x coincides with v");
  const double num = (1.0 - x) * (1.0 + x);
  if (num == 0.0) return 0.0;
  // 1 - 2xc + x^2 = (x - c)^2 + sin^2 v, kept in that form for accuracy near v = x.
  const double s = t == 0.0 || t == kPi ? 0.0 : std::sin(t);
  const double u = x - c;
  return num / (u * u + s * s);
}

RationalLevelFunction to_rational(const PoleSet& poles) {
  // Group by exact real part; a real pole is its own group kind.
  struct Group {
    double a;
    bool real;
    double count;
  };
  std::map<std::pair<double, bool>, double> counts;
  RationalLevelFunction out;
  out.n = poles.size();
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const bool real = poles.is_real_pole(k);
    if (real) out.real_pole_indices.push_back(k);
    counts[{poles.re(k), real}] += 1.0;
  }
  std::vector<Group> groups;
  groups.reserve(counts.size());
  for (const auto& [key, c] : counts) groups.push_back({key.first, key.second, c});

  std::vector<Polynomial> nums, dens;
  for (const Group& g : groups) {
    if (g.real) {
      nums.push_back(Polynomial({0.0, g.count}));
      dens.push_back(Polynomial({-g.a, 1.0}));
    } else {
      nums.push_back(Polynomial({0.0, -g.a * g.count, g.count}));
      dens.push_back(Polynomial::unit_quadratic(g.a));
    }
  }
  out.denominator = Polynomial::constant(1.0);
  for (const Polynomial& d : dens) out.denominator = out.denominator * d;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Polynomial term = nums[i];
    for (std::size_t j = 0; j < groups.size(); ++j)
      if (j != i) term = term * dens[j];
    out.numerator += term;
  }
  return out;
}

}  // namespace logderiv
