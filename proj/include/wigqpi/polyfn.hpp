#pragma once

#include <vector>

/// Special functions: Laguerre, normalized Hermite, Pochhammer and the
/// terminating 2F1 sums that define Meixner polynomials.
///
/// Degrees are plain `int`; every entry point rejects negative degrees with
/// DomainError. Evaluation is by upward three-term recurrence, which is
/// accurate to a few ulps times the degree for n <= ~200 and x <= ~100.
namespace wigqpi::polyfn {

/// L_n^alpha(x). Plain Laguerre is alpha = 0.
double laguerre(int n, double alpha, double x);

/// [L_0^alpha(x), ..., L_nmax^alpha(x)] from a single recurrence sweep.
std::vector<double> laguerre_all(int nmax, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// Power-series coefficients of L_n^alpha: result[j] multiplies x^j.
std::vector<double> laguerre_coefficients(int n, double alpha);

/// Hermite polynomial normalized so that H_n(x) e^{-x^2/2} is orthonormal
/// on the real line. H_0 = pi^{-1/4}.
double hermite_normalized(int n, double x);

/// H_n(x) e^{-x^2/2}, with the Gaussian folded into the recurrence so large
/// |x| does not overflow.
double hermite_function(int n, double x);

/// [h_0(x), ..., h_nmax(x)] with h_n(x) = H_n(x) e^{-x^2/2}.
std::vector<double> hermite_functions_all(int nmax, double x);

/// (alpha)_n = alpha (alpha+1) ... (alpha+n-1); (alpha)_0 = 1.
double pochhammer(double alpha, int n);

/// Which argument the Meixner 2F1 is evaluated at, given the parameter c.
enum class MeixnerArgument {
  OneMinusInvC,         // z = 1 - 1/c
  OneMinusInvCSquared,  // z = 1 - 1/c^2
};

/// Index pair, beta (= 2k) and argument convention. There is no default
/// convention: it must be named at construction.
// DESIGN POLY-2
struct MeixnerSpec {
  MeixnerSpec(int n_, int m_, double beta_, MeixnerArgument argument_)
      : n(n_), m(m_), beta(beta_), argument(argument_) {}

  int n;
  int m;
  double beta;
  MeixnerArgument argument;
};

/// 2F1(-n, -m; beta; z) as a finite sum over j <= min(n, m).
double hypergeometric_terminating(int n, int m, double beta, double z);

/// Meixner polynomial M_n(m, beta; .) at 0 < c < 1, with the argument
/// convention taken from the spec.
double meixner(const MeixnerSpec& spec, double c);

/// z for the given convention; c may be any nonzero real here.
double meixner_argument(MeixnerArgument argument, double c);

const char* to_string(MeixnerArgument argument);

}  // namespace wigqpi::polyfn
