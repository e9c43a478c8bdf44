#include "wigqpi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"

namespace wigqpi::spectra {

namespace {

void require_index(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": Fock index must be nonnegative");
}

void require_radius(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(what) + ": radius must be positive and finite");
  }
}

}  // namespace

const char* to_string(RegionKind kind) {
  return kind == RegionKind::Disk ? "disk" : "circle";
}

FockWeights FockWeights::from(std::vector<double> p, double tolerance) {
  if (p.empty()) throw DomainError("FockWeights: empty weight sequence");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("FockWeights: weights must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw DomainError("FockWeights: weights sum to " + std::to_string(sum) + ", not 1");
  }
  return FockWeights(std::move(p));
}

FockWeights FockWeights::fock(int n) {
  require_index(n, "FockWeights::fock");
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p.back() = 1.0;
  return FockWeights(std::move(p));
}

double circle_eigenvalue(int n, double a) {
  require_index(n, "circle_eigenvalue");
  require_radius(a, "circle_eigenvalue");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * sign * polyfn::laguerre(n, 0.0, 2.0 * a * a) * std::exp(-a * a) * a;
}

// Direct quadrature of the defining integral (DESIGN EIG-1).
quadrature::QuadResult disk_eigenvalue_result(int n, double a, const quadrature::QuadratureSpec& spec) {
  require_index(n, "disk_eigenvalue");
  require_radius(a, "disk_eigenvalue");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const auto integrand = [n, sign](double x) {
    return 2.0 * sign * polyfn::laguerre(n, 0.0, 2.0 * x * x) * std::exp(-x * x) * x;
  };
  return quadrature::integrate_1d(integrand, 0.0, a, spec);
}

double disk_eigenvalue(int n, double a, const quadrature::QuadratureSpec& spec) {
  return quadrature::require_converged(disk_eigenvalue_result(n, a, spec), "disk_eigenvalue");
}

Spectrum spectrum(RegionKind kind, double a, int nmax, const quadrature::QuadratureSpec& spec) {
  if (nmax < 0) throw DomainError("spectrum: nmax must be nonnegative");
  require_radius(a, "spectrum");
  Spectrum out;
  out.kind = kind;
  out.radius = a;
  out.values.reserve(static_cast<std::size_t>(nmax) + 1);
  out.error_estimates.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    if (kind == RegionKind::Circle) {
      out.values.push_back(circle_eigenvalue(n, a));
      out.error_estimates.push_back(0.0);
    } else {
      const auto r = disk_eigenvalue_result(n, a, spec);
      quadrature::require_converged(r, "spectrum");
      out.values.push_back(r.value);
      out.error_estimates.push_back(r.error_estimate);
    }
  }
  return out;
}

double qpi(const FockWeights& weights, const Spectrum& spectrum) {
  if (weights.size() > spectrum.values.size()) {
    throw DimensionMismatch("qpi: " + std::to_string(weights.size()) +
                            " weights exceed spectrum truncation of " +
                            std::to_string(spectrum.values.size()) + " entries");
  }
  const auto p = weights.values();
  return std::inner_product(p.begin(), p.end(), spectrum.values.begin(), 0.0);
}

// DESIGN EIG-2
double uniform_eigenvalue_bound(RegionKind kind, double a) {
  require_radius(a, "uniform_eigenvalue_bound");
  // |L_n(u) e^{-u/2}| <= 1 on u >= 0; integrate (disk) or evaluate (circle).
  return kind == RegionKind::Disk ? a * a : 2.0 * a;
}

BoundsReport bounds(RegionKind kind, double a, int nmax, const quadrature::QuadratureSpec& spec) {
  if (nmax < 1) throw DomainError("bounds: nmax must be at least 1");
  const Spectrum s = spectrum(kind, a, nmax, spec);

  BoundsReport report;
  const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
  const auto lo_i = static_cast<std::size_t>(lo - s.values.begin());
  const auto hi_i = static_cast<std::size_t>(hi - s.values.begin());
  // DESIGN EIG-4.
  // Exact ties occur (lambda_1^D(1) = lambda_2^D(1) = lambda_4^D(1)); report
  // the smallest index agreeing with the extremum within the error estimates.
  auto tie = [&](std::size_t n, std::size_t best) {
    return s.error_estimates[n] + s.error_estimates[best] +
           8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s.values[best]));
  };
  std::size_t arg_lo = lo_i;
  std::size_t arg_hi = hi_i;
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (s.values[n] - s.values[lo_i] <= tie(n, lo_i)) {
      arg_lo = n;
      break;
    }
  }
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (s.values[hi_i] - s.values[n] <= tie(n, hi_i)) {
      arg_hi = n;
      break;
    }
  }
  report.lower = s.values[arg_lo];
  report.upper = s.values[arg_hi];
  report.arg_lower = static_cast<int>(arg_lo);
  report.arg_upper = static_cast<int>(arg_hi);
  report.truncation = nmax;
  report.tail_bound = uniform_eigenvalue_bound(kind, a);
  report.certified = report.tail_bound <= report.upper && -report.tail_bound >= report.lower;

  const int from = nmax - nmax / 4;
  for (int n = from; n <= nmax; ++n) {
    report.tail_envelope = std::max(report.tail_envelope, std::abs(s.values[n]));
  }
  return report;
}

}  // namespace wigqpi::spectra
