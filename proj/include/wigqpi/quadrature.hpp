#pragma once

#include <functional>

namespace wigqpi::quadrature {

// Defaults: DESIGN QUAD-3.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  /// Throws DomainError unless both tolerances are positive and the
  /// subdivision limit is at least one.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  /// false when max_subdivisions ran out (value is then the best estimate).
  bool converged = true;
};

using Integrand = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Adaptive Gauss-Kronrod (10/21) integration of f over [lo, hi].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|), or until
/// spec.max_subdivisions bisections have been spent. Never throws on
/// non-convergence; check QuadResult::converged or use require_converged().
QuadResult integrate_1d(const Integrand& f, double lo, double hi, const QuadratureSpec& spec = {});

/// Integral of f(q, p) dq dp over the disk q^2 + p^2 <= radius^2 (plain
/// Lebesgue measure), as an adaptive radial integral of adaptive angular
/// integrals. The reported error includes the inner errors propagated
/// through the radial weight.
QuadResult integrate_disk(const Integrand2D& f, double radius, const QuadratureSpec& spec = {});

/// Returns result.value, or throws ToleranceNotReached naming `what`.
double require_converged(const QuadResult& result, const char* what);

}  // namespace wigqpi::quadrature
