#include <doctest.h>

#include <array>
#include <cmath>

#include "support.hpp"
#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"
#include "wigqpi/spectra.hpp"

using namespace wigqpi;
using namespace wigqpi::spectra;
using wigqpi::testing::uniform;

namespace {

const double e1 = std::exp(-1.0);

double disk0(double a) { return 1 - std::exp(-a * a); }
double disk1(double a) { return 1 - (1 + 2 * a * a) * std::exp(-a * a); }

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("circle closed forms") {
    CHECK(circle_eigenvalue(0, 1.0) == doctest::Approx(2 * e1).epsilon(1e-15));
    CHECK(circle_eigenvalue(0, 1.0) == doctest::Approx(0.7357588823428847));
    for (double a : {0.2, 0.9, 1.7}) {
      CHECK(circle_eigenvalue(1, a) == doctest::Approx(2 * a * (2 * a * a - 1) * std::exp(-a * a)).epsilon(1e-14));
    }
    CHECK(std::abs(circle_eigenvalue(1, 1 / std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(circle_eigenvalue(7, 1e-9)) < 1e-8);
  }

  TEST_CASE("disk closed forms") {
    CHECK(disk_eigenvalue(0, 1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-14));
    CHECK(disk_eigenvalue(1, 1.0) == doctest::Approx(1 - 3 * e1).epsilon(1e-13));
    for (double a : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      CHECK(std::abs(disk_eigenvalue(0, a) - disk0(a)) < 1e-12);
      CHECK(std::abs(disk_eigenvalue(1, a) - disk1(a)) < 1e-12);
    }
  }

  TEST_CASE("Laplace limit") {
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(disk_eigenvalue(n, 8.0) - 1.0) < 1e-8);
    // At a = 6 the deficit 1 - lambda_n^D(6) = 2(-1)^n \int_6^inf L_n(2x^2) e^{-x^2} x dx
    // grows like L_n(72) e^{-36}. Reference values of the integral without the
    // (-1)^n, from 30-digit mpmath.
    const std::array<double, 11> tail = {2.3195e-16, -1.6933e-14, 6.0145e-13, -1.3845e-11, 2.3207e-10, -3.0174e-9,
                                         3.1654e-8,  -2.7512e-7,  2.0188e-6,  -1.2679e-5,  6.8848e-5};
    for (int n = 0; n <= 10; ++n) {
      const double deficit = 1.0 - disk_eigenvalue(n, 6.0);
      const double want = n % 2 ? -tail[n] : tail[n];
      CHECK(std::abs(deficit - want) < 1e-4 * std::abs(tail[n]) + 1e-14);
      if (n <= 5) CHECK(std::abs(deficit) < 1e-8);
    }
  }

  TEST_CASE("spectrum examples") {
    const auto c = spectrum(RegionKind::Circle, 1.0, 2);
    REQUIRE(c.values.size() == 3);
    CHECK(c.values[0] == doctest::Approx(2 * e1));
    CHECK(c.values[1] == doctest::Approx(2 * e1));
    CHECK(c.values[2] == doctest::Approx(-2 * e1));
    const auto d = spectrum(RegionKind::Disk, 1.0, 0);
    REQUIRE(d.nmax() == 0);
    CHECK(d.values[0] == doctest::Approx(1 - e1));
    const auto d12 = spectrum(RegionKind::Disk, 1.3, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(d12.values[n] == disk_eigenvalue(n, 1.3));
      CHECK(std::abs(d12.values[n]) <= 1.0);
      CHECK(d12.error_estimates[n] >= 0.0);
    }
    CHECK(std::abs(spectrum(RegionKind::Disk, 1e-6, 0).values[0] - 1e-12) < 1e-20);
  }

  TEST_CASE("derivative relation") {
    const double h = 1e-5;
    for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (int n = 0; n <= 20; ++n) {
        const double fd = (disk_eigenvalue(n, a + h) - disk_eigenvalue(n, a - h)) / (2 * h);
        CHECK(std::abs(fd - circle_eigenvalue(n, a)) < 1e-6);
      }
    }
  }

  TEST_CASE("boundedness of disk eigenvalues") {
    for (double a : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0}) {
      const auto s = spectrum(RegionKind::Disk, a, 50);
      for (int n = 0; n <= 50; ++n) {
        CHECK(std::abs(s.values[n]) <= disk0(a) + 1e-12);
        CHECK(std::abs(s.values[n]) <= uniform_eigenvalue_bound(RegionKind::Disk, a));
      }
    }
  }

  TEST_CASE("circle sign structure near the origin") {
    for (int n = 0; n <= 30; ++n) {
      const double v = circle_eigenvalue(n, 1e-3);
      CHECK((n % 2 == 0 ? v > 0 : v < 0));
      CHECK(std::abs(v) <= uniform_eigenvalue_bound(RegionKind::Circle, 1e-3));
    }
  }

  TEST_CASE("qpi examples") {
    for (double a : {0.5, 1.0, 2.0}) {
      CHECK(qpi(FockWeights::fock(0), spectrum(RegionKind::Disk, a, 0)) == doctest::Approx(disk0(a)));
    }
    const auto s = spectrum(RegionKind::Disk, 1.0, 1);
    CHECK(qpi(FockWeights::from({0.5, 0.5}), s) == doctest::Approx(0.5 * (s.values[0] + s.values[1])));
    CHECK(qpi(FockWeights::from({0.5, 0.5}), s) == doctest::Approx(0.26424111765711533));
    CHECK(qpi(FockWeights::fock(2), spectrum(RegionKind::Circle, 1.0, 2)) == doctest::Approx(-2 * e1));
    CHECK(qpi(FockWeights::fock(2), spectrum(RegionKind::Circle, 1.0, 5)) == doctest::Approx(-2 * e1));
  }

  TEST_CASE("qpi is linear and lies within the bounds") {
    auto g = testing::rng(20);
    for (auto kind : {RegionKind::Disk, RegionKind::Circle}) {
      for (double a : {0.5, 1.0, 2.0}) {
        const auto b = bounds(kind, a, 64);
        const auto s = spectrum(kind, a, 64);
        for (int trial = 0; trial < 100; ++trial) {
          const auto len = static_cast<std::size_t>(uniform(g, 1, 65));
          const auto p = testing::probability_vector(g, len);
          const auto q = testing::probability_vector(g, len);
          const double t = uniform(g, 0, 1);
          std::vector<double> mix(len);
          for (std::size_t i = 0; i < len; ++i) mix[i] = t * p[i] + (1 - t) * q[i];
          const double vp = qpi(FockWeights::from(p), s), vq = qpi(FockWeights::from(q), s);
          const double vm = qpi(FockWeights::from(mix), s);
          CHECK(std::abs(vm - (t * vp + (1 - t) * vq)) < 1e-13);
          CHECK(vp >= b.lower - 1e-14);
          CHECK(vp <= b.upper + 1e-14);
        }
      }
    }
  }

  TEST_CASE("bounds examples") {
    const auto d = bounds(RegionKind::Disk, 1.0, 200);
    CHECK(d.lower == doctest::Approx(1 - 3 * e1).epsilon(1e-13));
    CHECK(d.arg_lower == 1);
    CHECK(d.upper == doctest::Approx(1 - e1).epsilon(1e-13));
    CHECK(d.arg_upper == 0);
    CHECK(d.lower < 0);
    CHECK(d.truncation == 200);
    CHECK(d.tail_bound == 1.0);
    for (double a : {0.3, 1.0, 2.5, 5.0}) CHECK(bounds(RegionKind::Disk, a, 64).upper < 1.0);
    const auto c = bounds(RegionKind::Circle, 0.1, 64);
    CHECK(c.upper == doctest::Approx(0.2 * std::exp(-0.01)).epsilon(1e-13));
    CHECK(c.arg_upper == 0);
    const auto c1 = bounds(RegionKind::Circle, 1.0, 64);
    CHECK(c1.lower <= c1.upper);
    for (int n = 0; n <= 64; ++n) {
      CHECK(std::abs(circle_eigenvalue(n, 1.0)) ==
            doctest::Approx(2 * e1 * std::abs(polyfn::laguerre(n, 0, 2.0))).epsilon(1e-12));
    }
  }

  TEST_CASE("bounds certification is honest") {
    // The uniform tail bound a^2 dominates the disk spectrum at a = 1, so no
    // certificate can be issued.
    CHECK_FALSE(bounds(RegionKind::Disk, 1.0, 32).certified);
    const auto small = bounds(RegionKind::Disk, 0.1, 32);
    CHECK(small.tail_bound == doctest::Approx(0.01));
    CHECK(small.tail_envelope <= small.tail_bound);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(FockWeights::from({}), DomainError);
    CHECK_THROWS_AS(FockWeights::from({0.5, 0.6}), DomainError);
    CHECK_THROWS_AS(FockWeights::from({1.2, -0.2}), DomainError);
    CHECK_THROWS_AS(FockWeights::fock(-1), DomainError);
    CHECK_THROWS_AS(qpi(FockWeights::fock(3), spectrum(RegionKind::Disk, 1.0, 2)), DimensionMismatch);
    CHECK_THROWS_AS(circle_eigenvalue(-1, 1.0), DomainError);
    CHECK_THROWS_AS(disk_eigenvalue(0, 0.0), DomainError);
    CHECK_THROWS_AS(bounds(RegionKind::Disk, 1.0, 0), DomainError);
    CHECK_THROWS_AS(spectrum(RegionKind::Disk, 1.0, -1), DomainError);
    CHECK(std::string(to_string(RegionKind::Circle)) == "circle");
  }
}
