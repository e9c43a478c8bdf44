#include "wigqpi/wigner.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"

namespace wigqpi::wigner {

namespace {

constexpr double kInvPi = std::numbers::inv_pi;

}  // namespace

HermiteState HermiteState::from(std::vector<double> coeffs, double tolerance) {
  if (coeffs.empty()) throw DomainError("HermiteState: empty coefficient sequence");
  double norm = 0.0;
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw DomainError("HermiteState: non-finite coefficient");
    norm += c * c;
  }
  if (std::abs(norm - 1.0) > tolerance) {
    throw DomainError("HermiteState: coefficients have square-sum " + std::to_string(norm) + ", not 1");
  }
  return HermiteState(std::move(coeffs));
}

HermiteState HermiteState::fock(int n) {
  if (n < 0) throw DomainError("HermiteState::fock: n must be nonnegative");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c.back() = 1.0;
  return HermiteState(std::move(c));
}

double HermiteState::wavefunction(double x) const {
  const auto h = polyfn::hermite_functions_all(max_degree(), x);
  double psi = 0.0;
  for (std::size_t n = 0; n < c_.size(); ++n) psi += c_[n] * h[n];
  return psi;
}

spectra::FockWeights HermiteState::fock_weights() const {
  std::vector<double> p;
  double sum = 0.0;
  for (double c : c_) {
    p.push_back(c * c);
    sum += c * c;
  }
  for (double& v : p) v /= sum;
  return spectra::FockWeights::from(std::move(p), 1e-12);
}

double fock_wigner(int n, double q, double p) {
  if (n < 0) throw DomainError("fock_wigner: n must be nonnegative");
  const double rho2 = q * q + p * p;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * kInvPi * polyfn::laguerre(n, 0.0, 2.0 * rho2) * std::exp(-rho2);
}

double cross_wigner_real(int m, int n, double q, double p) {
  if (m < 0 || n < 0) throw DomainError("cross_wigner_real: indices must be nonnegative");
  if (m < n) std::swap(m, n);  // real parts of W_mn and W_nm agree
  const int d = m - n;
  const double rho2 = q * q + p * p;
  double ratio = 1.0;  // n!/m!
  for (int i = n + 1; i <= m; ++i) ratio /= i;
  const std::complex<double> z(std::numbers::sqrt2 * q, std::numbers::sqrt2 * p);
  std::complex<double> zd(1.0, 0.0);
  for (int i = 0; i < d; ++i) zd *= z;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * kInvPi * std::sqrt(ratio) * zd.real() * polyfn::laguerre(n, d, 2.0 * rho2) *
         std::exp(-rho2);
}

double wigner_value(const HermiteState& state, double q, double p) {
  const auto c = state.coeffs();
  double w = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0.0) continue;
    w += c[m] * c[m] * cross_wigner_real(static_cast<int>(m), static_cast<int>(m), q, p);
    for (std::size_t n = 0; n < m; ++n) {
      if (c[n] == 0.0) continue;
      w += 2.0 * c[m] * c[n] * cross_wigner_real(static_cast<int>(m), static_cast<int>(n), q, p);
    }
  }
  return w;
}

// DESIGN WIG-1
double integration_half_width(const HermiteState& state) {
  return 12.0 + 2.0 * std::sqrt(2.0 * state.max_degree());
}

WignerIntegral wigner_integral(const HermiteState& state, double q, double p,
                               const quadrature::QuadratureSpec& spec) {
  const double half = integration_half_width(state);
  const auto product = [&](double x) {
    return state.wavefunction(q + 0.5 * x) * state.wavefunction(q - 0.5 * x);
  };
  const auto re = quadrature::integrate_1d(
      [&](double x) { return product(x) * std::cos(p * x); }, -half, half, spec);
  const auto im = quadrature::integrate_1d(
      [&](double x) { return product(x) * std::sin(p * x); }, -half, half, spec);
  quadrature::require_converged(re, "wigner_integral (real part)");
  quadrature::require_converged(im, "wigner_integral (imaginary part)");
  const double scale = 0.5 * kInvPi;
  return {scale * re.value, scale * im.value, scale * (re.error_estimate + im.error_estimate)};
}

double pure_state_wigner(const HermiteState& state, double q, double p,
                         const quadrature::QuadratureSpec& spec) {
  const auto w = wigner_integral(state, q, p, spec);
  if (std::abs(w.imag) > 1e-10) {
    throw BoundViolation("pure_state_wigner: imaginary part " + std::to_string(w.imag) +
                         " does not vanish for a real state");
  }
  return w.real;
}

quadrature::QuadResult qpi_oracle_disk_result(const HermiteState& state, double a,
                                              const quadrature::QuadratureSpec& spec) {
  if (!(a > 0.0)) throw DomainError("qpi_oracle_disk: radius must be positive");
  // The x-integrand is even for real states, so the real part is
  // (1/pi) \int_0^X; the innermost tolerance sits well below the outer one.
  quadrature::QuadratureSpec inner = spec;
  inner.abs_tol = std::min(1e-12, 1e-2 * spec.abs_tol);
  inner.rel_tol = std::min(1e-12, 1e-2 * spec.rel_tol);
  const double half = integration_half_width(state);
  bool inner_ok = true;
  const auto w = [&](double q, double p) {
    const auto r = quadrature::integrate_1d(
        [&](double x) {
          return state.wavefunction(q + 0.5 * x) * state.wavefunction(q - 0.5 * x) * std::cos(p * x);
        },
        0.0, half, inner);
    inner_ok = inner_ok && r.converged;
    return kInvPi * r.value;
  };
  auto result = quadrature::integrate_disk(w, a, spec);
  result.converged = result.converged && inner_ok;
  return result;
}

double qpi_oracle_disk(const HermiteState& state, double a, const quadrature::QuadratureSpec& spec) {
  return quadrature::require_converged(qpi_oracle_disk_result(state, a, spec), "qpi_oracle_disk");
}

double qpi_oracle_disk(int fock_n, double a, const quadrature::QuadratureSpec& spec) {
  return qpi_oracle_disk(HermiteState::fock(fock_n), a, spec);
}

double qpi_oracle_disk(const spectra::FockWeights& weights, double a,
                       const quadrature::QuadratureSpec& spec) {
  const auto p = weights.values();
  double sum = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (p[n] != 0.0) sum += p[n] * qpi_oracle_disk(static_cast<int>(n), a, spec);
  }
  return sum;
}

// -------------------------------------------------------------------- grids

void GridSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("grid: step must be positive");
  if (!(q_hi > q_lo)) throw DomainError("grid: empty q range");
  if (!(p_hi > p_lo)) throw DomainError("grid: empty p range");
  if ((q_hi - q_lo) / step > 1e5 || (p_hi - p_lo) / step > 1e5) {
    throw DomainError("grid: more than 1e5 points per axis");
  }
}

int GridSpec::q_count() const { return static_cast<int>(std::lround((q_hi - q_lo) / step)) + 1; }
int GridSpec::p_count() const { return static_cast<int>(std::lround((p_hi - p_lo) / step)) + 1; }

// Closed-form cross terms; the integral stays the oracle (DESIGN WIG-3).
WignerGrid evaluate_grid(const HermiteState& state, const GridSpec& spec) {
  spec.validate();
  WignerGrid grid;
  grid.spec = spec;
  const int nq = spec.q_count();
  const int np = spec.p_count();
  grid.values.resize(static_cast<std::size_t>(nq) * np);
  grid.min = INFINITY;
  grid.max = -INFINITY;
  for (int i = 0; i < nq; ++i) {
    const double q = spec.q_at(i);
    for (int j = 0; j < np; ++j) {
      const double p = spec.p_at(j);
      const double w = wigner_value(state, q, p);
      grid.values[static_cast<std::size_t>(i) * np + j] = w;
      if (w < grid.min) {
        grid.min = w;
        grid.q_at_min = q;
        grid.p_at_min = p;
      }
      if (w > grid.max) {
        grid.max = w;
        grid.q_at_max = q;
        grid.p_at_max = p;
      }
    }
  }
  grid.within_bounds = grid.min >= -kInvPi - kBoundSlack && grid.max <= kInvPi + kBoundSlack;
  return grid;
}

void WignerGrid::write_csv(std::ostream& os) const {
  os << "q,p,W\n";
  const int nq = spec.q_count();
  const int np = spec.p_count();
  char buf[96];
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < np; ++j) {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", spec.q_at(i), spec.p_at(j),
                    values[static_cast<std::size_t>(i) * np + j]);
      os << buf;
    }
  }
}

BoundScan bound_scan(const HermiteState& state, const GridSpec& spec) {
  const WignerGrid grid = evaluate_grid(state, spec);
  if (!grid.within_bounds) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "bound_scan: Wigner extrema [%.17g, %.17g] leave [-1/pi, 1/pi]",
                  grid.min, grid.max);
    throw BoundViolation(buf);
  }
  return {grid.min, grid.max, grid.q_at_min, grid.p_at_min, grid.q_at_max, grid.p_at_max};
}

}  // namespace wigqpi::wigner
