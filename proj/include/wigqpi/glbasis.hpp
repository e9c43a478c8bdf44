#pragma once

#include <array>
#include <map>
#include <span>

/// Gauss-Laguerre bases of the two differential-operator realizations of the
/// su(1,1) positive discrete series, and exact application of their
/// generators.
///
/// pi-realization: u_{k,l}^{(M)}(r) on L2([0, inf), dr), lowest weight
///   d = (l + 3/2)/2, generators L0, L+, L-, L2.
/// sigma-realization: e_m^{(k)}(r) on L2([0, inf), r^w dr), lowest weight k,
///   generators J0, J1, J2, J+, J-.
///
/// Generators act on RadialForm, a function class closed under d/dr,
/// multiplication by powers of r and dilation, so compositions such as the
/// Casimir element are evaluated exactly rather than by finite differences.
namespace wigqpi::glbasis {

/// f(r) = r^s exp(-beta r^w) sum_j c_j r^j, j an integer (may be negative).
// DESIGN GL-1
class RadialForm {
 public:
  RadialForm(double power, double beta, int w, std::map<int, double> coeffs);

  double operator()(double r) const;

  RadialForm derivative() const;
  /// r^j f(r)
  RadialForm times_power(int j) const;
  RadialForm scaled(double factor) const;
  /// f(xi r)
  RadialForm dilated(double xi) const;

  RadialForm operator+(const RadialForm& other) const;
  RadialForm operator-(const RadialForm& other) const;

  /// Zero form with the same envelope.
  RadialForm zero() const { return {power_, beta_, w_, {}}; }

  double power() const { return power_; }
  double beta() const { return beta_; }
  int w() const { return w_; }
  const std::map<int, double>& coeffs() const { return coeffs_; }

 private:
  void require_same_envelope(const RadialForm& other) const;

  double power_;
  double beta_;
  int w_;
  std::map<int, double> coeffs_;
};

inline RadialForm operator*(double factor, const RadialForm& f) { return f.scaled(factor); }

struct PiBasisParams {
  double M = 2.0;
  int k = 0;
  double l = -0.5;

  double lowest_weight() const { return 0.5 * (l + 1.5); }
  void validate() const;
};

struct SigmaBasisParams {
  double w = 2.0;
  double k = 0.5;
  int m = 0;

  double W() const { return (w + 1.0) / (2.0 * w); }
  void validate() const;
};

/// mu_-(n) = sqrt(n (2 lowest_weight + n - 1)); mu_+(n) = mu_-(n + 1).
double mu_minus(double lowest_weight, int n);
double mu_plus(double lowest_weight, int n);

/// Pointwise evaluation by Laguerre recurrence.
double u_basis(const PiBasisParams& params, double r);
double e_basis(const SigmaBasisParams& params, double r);

/// The same functions as RadialForm (explicit Laguerre coefficients). The
/// sigma form needs an integer w.
RadialForm u_form(const PiBasisParams& params);
RadialForm e_form(const SigmaBasisParams& params);

enum class PiGenerator { L0, Lplus, Lminus, L2 };
enum class SigmaGenerator { J0, J1, J2, Jplus, Jminus };

/// L0 = T + V, L+- = -T + V -+ (1/2)(r d/dr + 1/2), L2 = (L+ - L-)/2 with
/// T = (1/4M)(-d^2/dr^2 + l(l+1)/r^2) and V = (M/4) r^2.
RadialForm apply_pi_generator(PiGenerator which, double M, double l, const RadialForm& f);
RadialForm apply_pi_generator(PiGenerator which, const PiBasisParams& params);

/// J0 = (P + xi r^-w + r^w)/2, J1 = (P + xi r^-w - r^w)/2, J+- = J1 +- iJ2,
/// with P = w^-2 r^{2-w} p_r^2, p_r = -i(d/dr + 1/r), xi = k(k-1) - W(W-1).
/// J2 returns the real operator iJ2 = w^-1 (r d/dr + (w+1)/2), which is what
/// the dilation exp(t iJ2) exponentiates.
RadialForm apply_sigma_generator(SigmaGenerator which, double w, double k, const RadialForm& f);
RadialForm apply_sigma_generator(SigmaGenerator which, const SigmaBasisParams& params);

enum class Realization { Pi, Sigma };

/// Sample radii for residual checks.
/// DESIGN GL-3
inline constexpr std::array<double, 5> kSampleRadii = {0.2, 0.5, 1.0, 2.0, 4.0};

/// max_r |C f - lambda(lambda - 1) f| for C = S0^2 - (S+S- + S-S+)/2 on the
/// basis element, lambda the lowest weight.
double casimir_residual(const PiBasisParams& params, std::span<const double> radii = kSampleRadii);
double casimir_residual(const SigmaBasisParams& params, std::span<const double> radii = kSampleRadii);

/// max_r of |L0 u - (d+k) u|, |L+ u - mu+ u_{k+1}|, |L- u - mu- u_{k-1}|.
double eigen_ladder_residual(const PiBasisParams& params, std::span<const double> radii = kSampleRadii);
double eigen_ladder_residual(const SigmaBasisParams& params, std::span<const double> radii = kSampleRadii);

/// Three routes to lambda_n^C(a): the closed form, a sqrt(a) e_n^{(1/2)}(a)
/// and sqrt(a) u_{n,-1/2}^{(2)}(a). The sigma route carries no (-1)^n, so
/// circle = sigma_sign * via_sigma with sigma_sign = (-1)^n, while the pi
/// route agrees with sign +1.
// DESIGN GL-2
struct CircleIdentification {
  double circle = 0.0;
  double via_sigma = 0.0;
  double via_pi = 0.0;
  int sigma_sign = 1;
  int pi_sign = 1;

  double max_abs_discrepancy() const;
  double max_signed_discrepancy() const;
};

CircleIdentification identify_circle_spectrum(int n, double a);

/// exp(-t L2) f(a) = e^{t/4} f(e^{t/2} a).
RadialForm dilate_pi(const RadialForm& f, double t);
/// exp(t iJ2) f(a) = e^{t(w+1)/(2w)} f(e^{t/w} a); e^{3t/4} f(e^{t/2} a) at w = 2.
RadialForm dilate_sigma(const RadialForm& f, double t);

}  // namespace wigqpi::glbasis
