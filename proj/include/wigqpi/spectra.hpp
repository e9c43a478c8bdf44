#pragma once

#include <span>
#include <vector>

#include "wigqpi/quadrature.hpp"

/// Eigenvalues of the disk and circle operators on Fock states, the
/// quasiprobability integrals they give for Fock-diagonal states, and
/// extremal-eigenvalue bound searches.
namespace wigqpi::spectra {

enum class RegionKind { Disk, Circle };

const char* to_string(RegionKind kind);

struct Spectrum {
  RegionKind kind = RegionKind::Disk;
  double radius = 0.0;
  std::vector<double> values;           // lambda_0 ... lambda_nmax
  std::vector<double> error_estimates;  // quadrature error per entry; 0 for closed forms

  int nmax() const { return static_cast<int>(values.size()) - 1; }
};

/// Diagonal of a density operator in the Fock basis.
class FockWeights {
 public:
  /// Validates p_n >= 0 and |sum p_n - 1| <= tolerance.
  static FockWeights from(std::vector<double> p, double tolerance = 1e-12);
  /// Point mass on Fock state n.
  static FockWeights fock(int n);

  std::span<const double> values() const { return p_; }
  std::size_t size() const { return p_.size(); }

 private:
  explicit FockWeights(std::vector<double> p) : p_(std::move(p)) {}
  std::vector<double> p_;
};

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  // Smallest index attaining the extremum within quadrature error.
  int arg_lower = 0;
  int arg_upper = 0;
  int truncation = 0;
  /// Proven bound on |lambda_n| for every n (a^2 for disks, 2a for circles).
  double tail_bound = 0.0;
  /// True when tail_bound alone shows no n > truncation can beat the extrema.
  bool certified = false;
  /// max |lambda_n| over the last quarter of the scan; the heuristic
  /// evidence when certification fails.
  double tail_envelope = 0.0;
};

/// 2 (-1)^n L_n(2a^2) e^{-a^2} a.
double circle_eigenvalue(int n, double a);

/// 2 (-1)^n \int_0^a L_n(2x^2) e^{-x^2} x dx by adaptive quadrature.
/// Throws ToleranceNotReached if the quadrature does not converge.
double disk_eigenvalue(int n, double a, const quadrature::QuadratureSpec& spec = {});

/// Same integral, returning the quadrature record instead of throwing.
quadrature::QuadResult disk_eigenvalue_result(int n, double a,
                                              const quadrature::QuadratureSpec& spec = {});

Spectrum spectrum(RegionKind kind, double a, int nmax, const quadrature::QuadratureSpec& spec = {});

/// sum_n p_n lambda_n. Throws DimensionMismatch when the weights are longer
/// than the spectrum.
double qpi(const FockWeights& weights, const Spectrum& spectrum);

/// Uniform bound |lambda_n| <= tail_bound valid for every n.
double uniform_eigenvalue_bound(RegionKind kind, double a);

// nmax default: DESIGN EIG-3.
BoundsReport bounds(RegionKind kind, double a, int nmax = 128,
                    const quadrature::QuadratureSpec& spec = {});

}  // namespace wigqpi::spectra
