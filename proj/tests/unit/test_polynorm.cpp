#include <doctest.h>

#include <cmath>
#include <random>

#include "logderiv/errors.hpp"
#include "logderiv/polynorm.hpp"
#include "oracles.hpp"

using namespace logderiv;
using doctest::Approx;

namespace {

DiskPolynomial random_disk_polynomial(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> z(n);
  for (Complex& w : z) w = std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
  return DiskPolynomial(z);
}

// expanded coefficients in long double, independent of the product evaluation
std::vector<oracle::LComplex> expand(const DiskPolynomial& p) {
  std::vector<oracle::LComplex> c{oracle::LComplex(p.leading().real(), p.leading().imag())};
  for (const Complex& z : p.zeros()) {
    std::vector<oracle::LComplex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * oracle::LComplex(z.real(), z.imag());
    }
    c = next;
  }
  return c;
}

double brute_sup(const std::vector<oracle::LComplex>& c, bool derivative, std::size_t points) {
  long double best = 0;
  for (std::size_t i = 0; i < points; ++i) {
    const long double x = -1.0L + 2.0L * static_cast<long double>(i) / static_cast<long double>(points - 1);
    oracle::LComplex v = 0;
    for (std::size_t k = c.size(); k-- > (derivative ? 1u : 0u);)
      v = v * x + (derivative ? c[k] * static_cast<long double>(k) : c[k]);
    best = std::max(best, std::abs(v));
  }
  return static_cast<double>(best);
}

}  // namespace

TEST_CASE("disk polynomial construction") {
  CHECK_THROWS(DiskPolynomial({Complex(1.1, 0.0)}));
  CHECK_THROWS(DiskPolynomial({}));
  CHECK_THROWS(DiskPolynomial({Complex(0.5, 0.0)}, Complex(0.0, 0.0)));
  CHECK_NOTHROW(DiskPolynomial({Complex(1.0 + 5e-15, 0.0)}));
  const DiskPolynomial p({Complex(0.3, 1e-16)});
  CHECK(p.zeros()[0].imag() == 0.0);
}

TEST_CASE("values and derivatives match the expanded form") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const DiskPolynomial p = random_disk_polynomial(rng, 1 + trial % 8);
    const auto c = expand(p);
    for (int i = 0; i < 20; ++i) {
      const double x = ux(rng);
      oracle::LComplex v = 0, d = 0;
      for (std::size_t k = c.size(); k-- > 0;) v = v * static_cast<long double>(x) + c[k];
      for (std::size_t k = c.size(); k-- > 1;) d = d * static_cast<long double>(x) + c[k] * static_cast<long double>(k);
      CHECK(std::abs(p(x) - Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()))) <= 1e-12);
      CHECK(std::abs(p.derivative(x) - Complex(static_cast<double>(d.real()), static_cast<double>(d.imag()))) <= 1e-11);
    }
  }
  // derivative at an exact zero
  const DiskPolynomial q({Complex(0.5, 0.0), Complex(-0.5, 0.0)});
  CHECK(std::abs(q.derivative(0.5) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("Chebyshev norms") {
  const DiskPolynomial sq({0.0, 0.0});
  CHECK(cheb_norm(sq) == Approx(1.0));
  CHECK(cheb_norm(sq, NormOf::Derivative) == Approx(2.0));
  const DiskPolynomial pi({Complex(0, 1), Complex(0, -1)});
  CHECK(cheb_norm(pi) == Approx(2.0));
  CHECK(cheb_norm(pi, NormOf::Derivative) == Approx(2.0));
  CHECK(cheb_norm(DiskPolynomial({1.0})) == Approx(2.0));
  CHECK(sup_on_interval([](double x) { return 1.0 - (x - 0.123) * (x - 0.123); }, 2) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Chebyshev norm agrees with a dense scan") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const DiskPolynomial p = random_disk_polynomial(rng, 1 + trial % 8);
    const auto c = expand(p);
    for (bool der : {false, true}) {
      const double ours = cheb_norm(p, der ? NormOf::Derivative : NormOf::Value);
      const double scan = brute_sup(c, der, 1000001);
      CHECK(ours >= scan * (1 - 1e-12));
      CHECK(ours <= scan * (1 + 1e-8));
    }
  }
}

TEST_CASE("corollary checks on hand examples") {
  const NormReport a = verify_cor1(DiskPolynomial({0.0, 0.0}));
  CHECK(a.holds);
  CHECK(a.factor == 0.25);
  CHECK(verify_cor1(DiskPolynomial({Complex(0, 1), Complex(0, -1)})).holds);
  for (double t : {0.0, 1.0, 2.0, 3.0, kPi}) CHECK(verify_cor1(DiskPolynomial({std::polar(1.0, t)})).holds);

  const Cor2Report b = verify_cor2(DiskPolynomial({Complex(0, 1), Complex(0, -1)}));
  CHECK(b.counts.plus == 1);
  CHECK(b.counts.minus == 1);
  CHECK(b.counts.zero == 0);
  CHECK(b.norms.factor == 0.25);
  CHECK(b.norms.holds);

  const Cor2Report c = verify_cor2(DiskPolynomial({0.0, 0.0, 0.0, 0.0}));
  CHECK(c.counts.zero == 4);
  CHECK(c.norms.factor == 0.25);
  CHECK(c.norms.derivative_norm == Approx(4.0));

  const std::vector<Complex> five(5, Complex(0, 1));
  CHECK(verify_cor2(DiskPolynomial(five)).counts.plus == 5);
  CHECK(cor2_factor({5, 0, 0}) == 0.25);
  // the square-root branch only dominates for very lopsided counts
  CHECK(cor2_factor({0, 0, 900 * 900 / 8}) == Approx(std::max(0.25, std::sqrt(900.0 * 900 / 8) / 900)));
}

TEST_CASE("endpoint ratio") {
  CHECK(endpoint_ratio(DiskPolynomial({0.0, 0.0, 0.0}), 1.0) == Approx(3.0));
  CHECK(endpoint_ratio(DiskPolynomial({Complex(0, 1), Complex(0, -1)}), 1.0) == Approx(1.0));
  const std::vector<Complex> minus_one(6, Complex(-1.0, 0.0));
  CHECK(endpoint_ratio(DiskPolynomial(minus_one), 1.0) == Approx(3.0));
  CHECK_THROWS_AS((void)endpoint_ratio(DiskPolynomial(minus_one), -1.0), ZeroAtEndpoint);
  CHECK_THROWS_AS((void)endpoint_ratio(DiskPolynomial({0.0}), 0.5), std::invalid_argument);
}

TEST_CASE("two-sided positivity") {
  for (std::size_t n : {1u, 3u, 6u}) {
    const GDeltaReport r = g_delta_positivity(DiskPolynomial(std::vector<Complex>(n, 0.0)), 0.3);
    CHECK(r.both_positive());
    CHECK(r.measure_positive >= 0.7 - 1e-9);
  }
  CHECK(g_delta_positivity(DiskPolynomial({Complex(0, 1), Complex(0, -1)}), 0.4).both_positive());
  const GDeltaReport tiny = g_delta_positivity(DiskPolynomial({Complex(0, 1), Complex(0, -1)}), 1e-9);
  CHECK(tiny.measure_negative == Approx(1.0).epsilon(1e-6));
  CHECK(tiny.measure_positive == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("random corpus: corollaries, endpoint bound and positivity") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const DiskPolynomial p = random_disk_polynomial(rng, n);
    CHECK(verify_cor1(p).holds);
    CHECK(verify_cor2(p).norms.holds);
    for (double at : {1.0, -1.0}) CHECK(endpoint_ratio(p, at) >= n / 2.0 - 1e-9);
    CHECK(g_delta_positivity(p, 0.4).both_positive());
  }
}
