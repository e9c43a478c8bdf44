#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wigqpi/errors.hpp"
#include "wigqpi/quadrature.hpp"

using namespace wigqpi;
using namespace wigqpi::quadrature;
using wigqpi::testing::kPi;
using wigqpi::testing::uniform;

namespace {

double polyval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> random_poly(std::mt19937_64& g) {
  std::vector<double> c(static_cast<std::size_t>(uniform(g, 1, 9)));
  for (auto& x : c) x = uniform(g, -2.0, 2.0);
  return c;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("1d examples") {
    CHECK(integrate_1d([](double x) { return x; }, 0.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-15));
    const auto r = integrate_1d([](double x) { return 2 * x * std::exp(-x * x); }, 0.0, 1.0);
    CHECK(std::abs(r.value - (1 - std::exp(-1.0))) < 1e-14);
    CHECK(r.converged);
    const auto empty = integrate_1d([](double) { return 1.0; }, 2.0, 2.0);
    CHECK(empty.value == 0.0);
    CHECK(empty.error_estimate == 0.0);
  }

  TEST_CASE("error estimate respects the tolerance on success") {
    auto g = testing::rng(10);
    for (int trial = 0; trial < 50; ++trial) {
      const double k = uniform(g, 0.5, 30.0);
      QuadratureSpec spec{1e-11, 1e-9, 2000};
      const auto r = integrate_1d([k](double x) { return std::cos(k * x) * std::exp(-x); }, 0.0, 5.0, spec);
      REQUIRE(r.converged);
      CHECK(r.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value)));
      const double exact = (1 - std::exp(-5.0) * (std::cos(5 * k) - k * std::sin(5 * k))) / (1 + k * k);
      CHECK(std::abs(r.value - exact) < 1e-10);
    }
  }

  TEST_CASE("linearity on random polynomial pairs") {
    auto g = testing::rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_poly(g);
      const auto h = random_poly(g);
      const double alpha = uniform(g, -3, 3), beta = uniform(g, -3, 3);
      const double lo = uniform(g, -2, 0), hi = uniform(g, 0, 2);
      const auto rf = integrate_1d([&](double x) { return polyval(f, x); }, lo, hi);
      const auto rh = integrate_1d([&](double x) { return polyval(h, x); }, lo, hi);
      const auto rc = integrate_1d([&](double x) { return alpha * polyval(f, x) + beta * polyval(h, x); }, lo, hi);
      const double combined = std::abs(alpha) * rf.error_estimate + std::abs(beta) * rh.error_estimate +
                              rc.error_estimate + 1e-13 * (1 + std::abs(rc.value));
      CHECK(std::abs(rc.value - (alpha * rf.value + beta * rh.value)) <= combined);
    }
  }

  TEST_CASE("interval additivity") {
    auto g = testing::rng(12);
    const auto f = [](double x) { return std::sin(3 * x) / (1 + x * x); };
    for (int trial = 0; trial < 50; ++trial) {
      const double a = uniform(g, -5, 0), b = uniform(g, a, 5), c = uniform(g, b, 8);
      const auto ab = integrate_1d(f, a, b), bc = integrate_1d(f, b, c), ac = integrate_1d(f, a, c);
      CHECK(std::abs(ab.value + bc.value - ac.value) <= ab.error_estimate + bc.error_estimate + ac.error_estimate + 1e-12);
    }
  }

  TEST_CASE("non-convergence is reported, not thrown") {
    QuadratureSpec tight{1e-15, 1e-15, 3};
    const auto r = integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(r.subdivisions_used <= 3);
    CHECK_THROWS_AS(require_converged(r, "test"), ToleranceNotReached);
    try {
      require_converged(r, "test");
    } catch (const ToleranceNotReached& e) {
      CHECK(e.value() == r.value);
      CHECK(e.error_estimate() == r.error_estimate);
    }
  }

  TEST_CASE("QuadratureSpec validation") {
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 0, 1, {0.0, 1e-10, 10}), DomainError);
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 0, 1, {1e-10, -1.0, 10}), DomainError);
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 0, 1, {1e-10, 1e-10, 0}), DomainError);
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 1, 0), DomainError);
    CHECK_THROWS_AS(integrate_disk([](double, double) { return 1.0; }, -1.0), DomainError);
  }

  TEST_CASE("disk examples") {
    for (double a : {0.3, 1.0, 2.5}) {
      CHECK(integrate_disk([](double, double) { return 1.0; }, a).value == doctest::Approx(kPi * a * a).epsilon(1e-13));
      CHECK(std::abs(integrate_disk([](double q, double) { return q; }, a).value) < 1e-12);
    }
    const auto r = integrate_disk([](double q, double p) { return std::exp(-q * q - p * p); }, 1.0);
    CHECK(std::abs(r.value - kPi * (1 - std::exp(-1.0))) < 1e-12);
    CHECK(r.converged);
  }

  TEST_CASE("rotational invariance against the polar reduction") {
    auto g = testing::rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const double k = uniform(g, 0.5, 4.0), a = uniform(g, 0.2, 3.0);
      const auto radial = [k](double s) { return std::cos(k * s) * std::exp(-s); };
      const auto disk = integrate_disk([&](double q, double p) { return radial(q * q + p * p); }, a);
      const auto polar = integrate_1d([&](double r) { return 2 * kPi * radial(r * r) * r; }, 0.0, a);
      CHECK(std::abs(disk.value - polar.value) <= disk.error_estimate + polar.error_estimate + 1e-12);
    }
  }

  TEST_CASE("disk error estimate within tolerance on success") {
    QuadratureSpec spec{1e-10, 1e-10, 2000};
    const auto r = integrate_disk([](double q, double p) { return std::cos(3 * q) * std::exp(-p * p); }, 2.0, spec);
    REQUIRE(r.converged);
    CHECK(r.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value)));
  }
}
