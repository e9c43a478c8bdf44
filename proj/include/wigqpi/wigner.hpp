#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "wigqpi/quadrature.hpp"
#include "wigqpi/spectra.hpp"

/// Wigner functions of pure states psi(x) = sum_n c_n H_n(x) e^{-x^2/2} and
/// brute-force quasiprobability integrals over disks.
///
/// Measure: W integrates to 1 against plain dq dp, which is what makes the
/// disk integral of the Fock-n Wigner function equal lambda_n^D(a).
namespace wigqpi::wigner {

/// Real Hermite coefficients with sum c_n^2 = 1.
// Real coefficients only (DESIGN WIG-2).
class HermiteState {
 public:
  static HermiteState from(std::vector<double> coeffs, double tolerance = 1e-10);
  static HermiteState fock(int n);

  std::span<const double> coeffs() const { return c_; }
  int max_degree() const { return static_cast<int>(c_.size()) - 1; }

  double wavefunction(double x) const;
  /// |c_n|^2, the Fock diagonal of the projector.
  spectra::FockWeights fock_weights() const;

 private:
  explicit HermiteState(std::vector<double> c) : c_(std::move(c)) {}
  std::vector<double> c_;
};

/// ((-1)^n / pi) L_n(2(q^2+p^2)) e^{-(q^2+p^2)}.
double fock_wigner(int n, double q, double p);

/// Closed form of the cross Wigner function of Fock states m and n,
/// (1/2pi) \int h_m(q+x/2) h_n(q-x/2) e^{ipx} dx, real part. For m >= n it is
/// ((-1)^n/pi) sqrt(n!/m!) Re[(sqrt2 (q+ip))^{m-n}] L_n^{m-n}(2 rho^2) e^{-rho^2};
/// the imaginary part cancels in the symmetric sum for real coefficients.
double cross_wigner_real(int m, int n, double q, double p);

/// Wigner function of a real-coefficient state from the closed-form cross
/// terms. Used for grids.
double wigner_value(const HermiteState& state, double q, double p);

struct WignerIntegral {
  double real = 0.0;
  double imag = 0.0;
  double error_estimate = 0.0;
};

/// Half-width of the x-integration window: 12 + 2 sqrt(2 max_degree).
double integration_half_width(const HermiteState& state);

/// (1/2pi) \int psi(q+x/2) psi(q-x/2) e^{ipx} dx over |x| <= half width, both
/// parts evaluated.
WignerIntegral wigner_integral(const HermiteState& state, double q, double p,
                               const quadrature::QuadratureSpec& spec = {});

/// Real part of wigner_integral(); throws BoundViolation if the imaginary
/// part exceeds 1e-10 (it must vanish for real coefficients).
double pure_state_wigner(const HermiteState& state, double q, double p,
                         const quadrature::QuadratureSpec& spec = {});

/// \iint_{q^2+p^2 <= a^2} W dq dp with W from the integral definition.
quadrature::QuadResult qpi_oracle_disk_result(const HermiteState& state, double a,
                                              const quadrature::QuadratureSpec& spec = {});
double qpi_oracle_disk(const HermiteState& state, double a, const quadrature::QuadratureSpec& spec = {});
double qpi_oracle_disk(int fock_n, double a, const quadrature::QuadratureSpec& spec = {});
/// Fock-diagonal mixture: the weighted sum of per-Fock-state oracles.
double qpi_oracle_disk(const spectra::FockWeights& weights, double a,
                       const quadrature::QuadratureSpec& spec = {});

struct GridSpec {
  double q_lo = -5.0;
  double q_hi = 5.0;
  double p_lo = -5.0;
  double p_hi = 5.0;
  double step = 0.05;

  /// Throws DomainError for step <= 0 or an empty/inverted range.
  void validate() const;
  /// Points per axis: round((hi - lo)/step) + 1.
  int q_count() const;
  int p_count() const;
  double q_at(int i) const { return q_lo + i * step; }
  double p_at(int j) const { return p_lo + j * step; }
};

struct WignerGrid {
  GridSpec spec;
  std::vector<double> values;  // q-major: values[i * p_count + j] = W(q_i, p_j)
  double min = 0.0;
  double max = 0.0;
  double q_at_min = 0.0, p_at_min = 0.0, q_at_max = 0.0, p_at_max = 0.0;
  bool within_bounds = true;

  /// "q,p,W" header, 12 significant digits, '\n' line endings.
  void write_csv(std::ostream& os) const;
};

// DESIGN WIG-4
inline constexpr double kBoundSlack = 1e-12;

WignerGrid evaluate_grid(const HermiteState& state, const GridSpec& spec);

struct BoundScan {
  double min = 0.0;
  double max = 0.0;
  double q_at_min = 0.0, p_at_min = 0.0, q_at_max = 0.0, p_at_max = 0.0;
};

/// Extrema over the grid; throws BoundViolation if any value leaves
/// [-1/pi - 1e-12, 1/pi + 1e-12].
BoundScan bound_scan(const HermiteState& state, const GridSpec& spec);

}  // namespace wigqpi::wigner
