#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wigqpi/polyfn.hpp"
#include "wigqpi/quadrature.hpp"
#include "wigqpi/spectra.hpp"

/// Spectra at radius xi*a expanded in spectra at radius a, with Meixner
/// polynomial coefficients t_n(m) = N_m c^n M_n(m, 1; .), N_m =
/// (-1)^m sqrt(1 - c^2) c^m.
///
/// Two readings of the expansion are possible for the dilation direction and
/// for the 2F1 argument; both are resolved numerically by
/// resolve_conventions(), never assumed. The disk version carries the
/// Jacobian of x -> xi x, also resolved numerically.
namespace wigqpi::scaling {

/// Whether xi = e^{r/2} (Direct) or xi = e^{-r/2} (Inverted).
enum class Direction { Direct, Inverted };

/// Prefactor of the disk series: 1, or xi from d(xi x) = xi dx.
enum class DiskFactor { Unit, Jacobian };

const char* to_string(Direction d);
const char* to_string(DiskFactor f);

struct Convention {
  Direction direction;
  polyfn::MeixnerArgument argument;
  DiskFactor disk_factor;

  bool operator==(const Convention&) const = default;
};

struct ScalingParams {
  double xi = 1.0;
  Direction direction = Direction::Inverted;
  polyfn::MeixnerArgument argument = polyfn::MeixnerArgument::OneMinusInvCSquared;

  static ScalingParams make(double xi, const Convention& convention);

  /// 2 ln xi, sign-flipped for Inverted.
  double r() const;
  /// (e^r - 1)/(e^r + 1) = tanh(r/2).
  double c() const;
};

struct ExpansionCoefficients {
  int m = 0;
  std::vector<double> terms;  // t_0 ... t_truncation
  int truncation = 0;
  double tail_estimate = 0.0;
};

/// Phase of row m: (-1)^m.
double phase(int m);

/// Terms for n = 0..trunc (trunc >= m). Evaluated as
/// sum_j coef_j c^{m+n-2j} (c^2 z)^j so that small |c| (xi near 1) and c = 0
/// stay finite; at c = 0 the row is the unit vector e_m.
ExpansionCoefficients expansion_coefficients(int m, const ScalingParams& params, int trunc);

/// Smallest N >= m whose geometric tail |N_m| |c|^{N+1} max_{n<=N}|M_n(m)| /
/// (1 - |c|) is below 1e-10 (with |t_N| already decreasing), capped at 2000.
int default_truncation(int m, const ScalingParams& params);

inline constexpr int kMaxTruncation = 2000;
inline constexpr double kTailTarget = 1e-10;

/// sum_n t_n lambda_n over min(terms, lambdas) entries.
double apply_expansion(const ExpansionCoefficients& coeffs, std::span<const double> lambdas);

struct CandidateResidual {
  Direction direction;
  polyfn::MeixnerArgument argument;
  double residual = 0.0;
  bool passed = false;
};

struct DiskCandidateResidual {
  DiskFactor factor;
  double residual = 0.0;
  bool passed = false;
};

struct ConventionReport {
  double a = 1.0;
  double xi = 2.0;
  int trunc = 200;
  int max_m = 4;
  double pass_tolerance = 1e-8;
  double generating_function_residual = 0.0;
  std::vector<CandidateResidual> candidates;
  std::vector<DiskCandidateResidual> disk_candidates;
  Convention resolved;

  /// Plain-text CONVENTIONS report.
  std::string text() const;
  /// The lines that define the resolved convention; hashed for fixtures.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Evaluates all four (direction, argument) candidates for m = 0..4 against
/// the closed-form lambda_m^C(xi a), then the two disk prefactors for
/// m = 0..2 against lambda_m^D(xi a). m = 0 alone cannot separate the two
/// argument conventions because M_n(0, .) = 1.
/// Throws AmbiguousConvention unless exactly one candidate of each passes.
ConventionReport resolve_conventions(double a, double xi, int trunc,
                                     const quadrature::QuadratureSpec& spec = {});

/// Resolved once per process (a = 1, xi = 2, trunc = 200) and read-only
/// afterwards.
const ConventionReport& default_convention_report();

/// sqrt(1-c^2) sum_n c^n lambda_n^C(a) in closed form via the Laguerre
/// generating function sum_n t^n L_n(x) = e^{-tx/(1-t)}/(1-t), t = -c.
double generating_function_m0(double a, double c);

/// Series value for lambda_m^{kind}(xi a). `convention` must hold a value,
/// otherwise ConventionUnresolved is thrown. trunc = nullopt picks
/// default_truncation().
double scaled_spectrum(spectra::RegionKind kind, int m, double a, double xi,
                       std::optional<int> trunc, const std::optional<Convention>& convention,
                       const quadrature::QuadratureSpec& spec = {});

struct ScaleCheckRow {
  spectra::RegionKind kind;
  int m = 0;
  double direct = 0.0;
  double direct_error = 0.0;  // quadrature error; 0 for the circle closed form
  double series = 0.0;
  double series_error = 0.0;  // sum_n |t_n| err(lambda_n), excluding the tail
  double discrepancy = 0.0;
  int truncation = 0;
  double tail_estimate = 0.0;
};

/// Series and direct values for m = 0..mmax of one region kind.
std::vector<ScaleCheckRow> scale_check(spectra::RegionKind kind, int mmax, double a, double xi,
                                       std::optional<int> trunc,
                                       const std::optional<Convention>& convention,
                                       const quadrature::QuadratureSpec& spec = {});

/// Rows m = 0..mmax of the coefficient matrix, each of length trunc + 1.
std::vector<std::vector<double>> coefficient_matrix(int mmax, const ScalingParams& params, int trunc);

/// Compares the dilation actions exp(-tL2), exp(t iJ2) on u_{n,-1/2}^{(2)}
/// and e_n^{(1/2)} with lambda_n^C(e^{t/2} a); returns the largest
/// discrepancy among the pi route, the sigma route (sign (-1)^n) and the
/// intertwining exp(-tL2 + t/2)(u/a) = exp(t iJ2) e.
double dilation_check(int n, double a, double t);

}  // namespace wigqpi::scaling
