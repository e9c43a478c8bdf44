#include <doctest.h>

#include <cmath>
#include <sstream>

#include "support.hpp"
#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"
#include "wigqpi/quadrature.hpp"
#include "wigqpi/spectra.hpp"
#include "wigqpi/wigner.hpp"

using namespace wigqpi;
using namespace wigqpi::wigner;
using wigqpi::testing::kPi;
using wigqpi::testing::uniform;

namespace {

HermiteState random_state(std::mt19937_64& g, std::size_t len) {
  return HermiteState::from(testing::unit_vector(g, len));
}

}  // namespace

TEST_SUITE("wigner") {
  TEST_CASE("Fock Wigner functions at the origin") {
    CHECK(fock_wigner(0, 0, 0) == doctest::Approx(1 / kPi).epsilon(1e-15));
    CHECK(fock_wigner(1, 0, 0) == doctest::Approx(-1 / kPi).epsilon(1e-15));
    for (int n = 0; n <= 10; ++n) CHECK(fock_wigner(n, 0, 0) == doctest::Approx((n % 2 ? -1 : 1) / kPi));
  }

  TEST_CASE("Fock Wigner closed form equals the defining integral") {
    auto g = testing::rng(40);
    for (int n = 0; n <= 3; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const double q = uniform(g, -3, 3), p = uniform(g, -3, 3);
        CHECK(std::abs(fock_wigner(n, q, p) - pure_state_wigner(HermiteState::fock(n), q, p)) < 1e-8);
      }
    }
  }

  TEST_CASE("cross terms against the integral for superpositions") {
    auto g = testing::rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_state(g, 5);
      const double q = uniform(g, -2.5, 2.5), p = uniform(g, -2.5, 2.5);
      const auto w = wigner_integral(s, q, p);
      CHECK(std::abs(w.imag) < 1e-10);
      CHECK(std::abs(wigner_value(s, q, p) - w.real) < 1e-8);
    }
    // Cross term symmetry: W_mn(q, p) = W_nm(q, -p) for the real part.
    CHECK(cross_wigner_real(3, 1, 0.4, 0.7) == doctest::Approx(cross_wigner_real(1, 3, 0.4, -0.7)));
  }

  TEST_CASE("rotational symmetry of Fock states") {
    auto g = testing::rng(42);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = static_cast<int>(uniform(g, 0, 8));
      const double q = uniform(g, -3, 3), p = uniform(g, -3, 3), th = uniform(g, 0, 2 * kPi);
      const double qr = std::cos(th) * q - std::sin(th) * p, pr = std::sin(th) * q + std::cos(th) * p;
      CHECK(std::abs(fock_wigner(n, q, p) - fock_wigner(n, qr, pr)) < 1e-13);
      const double rho2 = q * q + p * p;
      CHECK(fock_wigner(n, q, p) ==
            doctest::Approx((n % 2 ? -1 : 1) / kPi * polyfn::laguerre(n, 0, 2 * rho2) * std::exp(-rho2)));
    }
  }

  TEST_CASE("parity at the origin") {
    auto g = testing::rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = testing::unit_vector(g, 6);
      double parity = 0.0;
      for (std::size_t n = 0; n < c.size(); ++n) parity += (n % 2 ? -1 : 1) * c[n] * c[n];
      CHECK(std::abs(pure_state_wigner(HermiteState::from(c), 0, 0) - parity / kPi) < 1e-8);
    }
  }

  TEST_CASE("decay far from the origin") {
    const double h = 1 / std::sqrt(2.0);
    const auto s = HermiteState::from({h, h});
    CHECK(std::abs(wigner_value(s, 9.0, 0.0)) < 1e-30);
    CHECK(std::abs(pure_state_wigner(s, 9.0, 0.0)) < 1e-12);
  }

  TEST_CASE("normalization") {
    auto g = testing::rng(44);
    quadrature::QuadratureSpec spec{1e-9, 1e-9, 4000};
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = random_state(g, 4);
      const auto r = quadrature::integrate_disk([&](double q, double p) { return wigner_value(s, q, p); }, 10.0, spec);
      CHECK(std::abs(r.value - 1.0) < 1e-6);
    }
    CHECK(std::abs(qpi_oracle_disk(HermiteState::from({0.6, 0.0, 0.8}), 10.0) - 1.0) < 1e-6);
  }

  TEST_CASE("qpi oracle examples") {
    const double e1 = std::exp(-1.0);
    CHECK(std::abs(qpi_oracle_disk(0, 1.0) - (1 - e1)) < 1e-8);
    CHECK(std::abs(qpi_oracle_disk(1, 1.0) - (1 - 3 * e1)) < 1e-8);
    CHECK(std::abs(qpi_oracle_disk(spectra::FockWeights::from({0.5, 0.5}), 1.0) - (1 - 2 * e1)) < 1e-8);
  }

  TEST_CASE("oracle equivalence with disk eigenvalues") {
    for (double a : {0.5, 1.0, 2.0}) {
      for (int n = 0; n <= 5; ++n) CHECK(std::abs(qpi_oracle_disk(n, a) - spectra::disk_eigenvalue(n, a)) < 1e-6);
    }
  }

  TEST_CASE("superposition oracle matches Fock-diagonal qpi") {
    auto g = testing::rng(45);
    for (int trial = 0; trial < 3; ++trial) {
      const auto s = random_state(g, 4);
      const double a = uniform(g, 0.5, 2.0);
      const double spectral = spectra::qpi(s.fock_weights(), spectra::spectrum(spectra::RegionKind::Disk, a, 3));
      CHECK(std::abs(qpi_oracle_disk(s, a) - spectral) < 1e-6);
    }
  }

  TEST_CASE("circle variant by finite difference of the disk oracle") {
    const double h = 1e-3;
    for (int n = 0; n <= 3; ++n) {
      for (double a : {0.5, 1.0, 2.0}) {
        const double fd = (qpi_oracle_disk(n, a + h) - qpi_oracle_disk(n, a - h)) / (2 * h);
        CHECK(std::abs(fd - spectra::circle_eigenvalue(n, a)) < 1e-4);
      }
    }
  }

  TEST_CASE("bound theorem on random states") {
    auto g = testing::rng(46);
    const GridSpec grid;  // |q|, |p| <= 5, step 0.05
    CHECK(grid.q_count() == 201);
    CHECK(grid.q_at(100) == 0.0);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_state(g, 4);
      const auto w = evaluate_grid(s, grid);
      CHECK(w.within_bounds);
      CHECK(w.max <= 1 / kPi + kBoundSlack);
      CHECK(w.min >= -1 / kPi - kBoundSlack);
    }
  }

  TEST_CASE("Fock extrema on the grid") {
    const auto s0 = bound_scan(HermiteState::fock(0), GridSpec{});
    CHECK(std::abs(s0.max - 1 / kPi) < 1e-12);
    CHECK(s0.q_at_max == 0.0);
    CHECK(s0.p_at_max == 0.0);
    const auto s1 = bound_scan(HermiteState::fock(1), GridSpec{-1, 1, -1, 1, 0.05});
    CHECK(std::abs(s1.min + 1 / kPi) < 1e-12);
    CHECK(std::abs(s1.q_at_min) < 1e-12);
  }

  TEST_CASE("grid CSV layout") {
    const auto w = evaluate_grid(HermiteState::fock(0), GridSpec{0, 0.1, 0, 0.1, 0.1});
    std::ostringstream os;
    w.write_csv(os);
    const std::string text = os.str();
    CHECK(text.rfind("q,p,W\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.find('\r') == std::string::npos);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(HermiteState::from({0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(HermiteState::from({}), DomainError);
    CHECK_THROWS_AS(HermiteState::fock(-1), DomainError);
    CHECK_THROWS_AS((GridSpec{1, 1 - 0.5, -1, 1, 0.1}.validate()), DomainError);
    CHECK_THROWS_AS((GridSpec{-1, 1, -1, 1, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS(evaluate_grid(HermiteState::fock(0), GridSpec{-1, 1, 2, 1, 0.1}), DomainError);
    const auto s = HermiteState::from({0.6, 0.0, 0.8});
    const auto fw = s.fock_weights();
    CHECK(fw.values()[0] == doctest::Approx(0.36));
    CHECK(fw.values()[2] == doctest::Approx(0.64));
    CHECK(integration_half_width(s) == doctest::Approx(12 + 2 * std::sqrt(4.0)));
  }
}
