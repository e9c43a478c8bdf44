#include "wigqpi/glbasis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"
#include "wigqpi/spectra.hpp"

namespace wigqpi::glbasis {

// ---------------------------------------------------------------- RadialForm

RadialForm::RadialForm(double power, double beta, int w, std::map<int, double> coeffs)
    : power_(power), beta_(beta), w_(w), coeffs_(std::move(coeffs)) {
  if (w_ < 1) throw DomainError("RadialForm: exponent w must be a positive integer");
}

double RadialForm::operator()(double r) const {
  if (!(r > 0.0)) throw DomainError("RadialForm: r must be positive");
  double sum = 0.0;
  for (const auto& [j, c] : coeffs_) sum += c * std::pow(r, j);
  return std::pow(r, power_) * std::exp(-beta_ * std::pow(r, w_)) * sum;
}

RadialForm RadialForm::derivative() const {
  // d/dr [r^{s+j} e^{-beta r^w}] = (s+j) r^{s+j-1} e^{..} - beta w r^{s+j+w-1} e^{..}
  std::map<int, double> out;
  for (const auto& [j, c] : coeffs_) {
    const double lead = (power_ + j) * c;
    if (lead != 0.0) out[j - 1] += lead;
    if (beta_ != 0.0) out[j + w_ - 1] -= beta_ * w_ * c;
  }
  return {power_, beta_, w_, std::move(out)};
}

RadialForm RadialForm::times_power(int j) const {
  std::map<int, double> out;
  for (const auto& [e, c] : coeffs_) out[e + j] = c;
  return {power_, beta_, w_, std::move(out)};
}

RadialForm RadialForm::scaled(double factor) const {
  std::map<int, double> out = coeffs_;
  for (auto& entry : out) entry.second *= factor;
  return {power_, beta_, w_, std::move(out)};
}

RadialForm RadialForm::dilated(double xi) const {
  if (!(xi > 0.0)) throw DomainError("RadialForm::dilated: scale must be positive");
  const double front = std::pow(xi, power_);
  std::map<int, double> out;
  for (const auto& [j, c] : coeffs_) out[j] = front * c * std::pow(xi, j);
  return {power_, beta_ * std::pow(xi, w_), w_, std::move(out)};
}

void RadialForm::require_same_envelope(const RadialForm& other) const {
  if (power_ != other.power_ || beta_ != other.beta_ || w_ != other.w_) {
    throw DomainError("RadialForm: cannot combine forms with different envelopes");
  }
}

RadialForm RadialForm::operator+(const RadialForm& other) const {
  require_same_envelope(other);
  std::map<int, double> out = coeffs_;
  for (const auto& [j, c] : other.coeffs_) out[j] += c;
  return {power_, beta_, w_, std::move(out)};
}

RadialForm RadialForm::operator-(const RadialForm& other) const {
  return *this + other.scaled(-1.0);
}

// ------------------------------------------------------------------- bases

// DESIGN GL-6
void PiBasisParams::validate() const {
  if (!(M > 0.0)) throw DomainError("PiBasisParams: M must be positive");
  if (k < 0) throw DomainError("PiBasisParams: k must be nonnegative");
  if (!(k + l + 1.5 > 0.0)) throw DomainError("PiBasisParams: Gamma(k+l+3/2) must be positive");
}

void SigmaBasisParams::validate() const {
  if (!(w >= 1.0)) throw DomainError("SigmaBasisParams: w must be >= 1");
  if (!(k > 0.0)) throw DomainError("SigmaBasisParams: k must be positive");
  if (m < 0) throw DomainError("SigmaBasisParams: m must be nonnegative");
}

double mu_minus(double lowest_weight, int n) {
  if (n < 0) throw DomainError("mu_minus: n must be nonnegative");
  return std::sqrt(n * (2.0 * lowest_weight + n - 1.0));
}

double mu_plus(double lowest_weight, int n) { return mu_minus(lowest_weight, n + 1); }

namespace {

double pi_norm(const PiBasisParams& p) {
  const double sign = (p.k % 2 == 0) ? 1.0 : -1.0;
  const double ratio = std::exp(std::lgamma(p.k + 1.0) - std::lgamma(p.k + p.l + 1.5));
  return sign * std::sqrt(2.0 * std::sqrt(p.M) * ratio);
}

double sigma_norm(const SigmaBasisParams& p) {
  const double ratio = std::exp(std::lgamma(p.m + 1.0) - std::lgamma(2.0 * p.k + p.m));
  return std::pow(2.0, p.W()) * std::sqrt(p.w * ratio);
}

int integer_w(double w) {
  const double rounded = std::round(w);
  if (rounded != w) throw DomainError("generator application needs an integer w");
  return static_cast<int>(rounded);
}

}  // namespace

double u_basis(const PiBasisParams& params, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError("u_basis: r must be positive");
  const double x = params.M * r * r;
  return pi_norm(params) * std::pow(std::sqrt(params.M) * r, params.l + 1.0) *
         std::exp(-0.5 * x) * polyfn::laguerre(params.k, params.l + 0.5, x);
}

double e_basis(const SigmaBasisParams& params, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError("e_basis: r must be positive");
  const double rw = std::pow(r, params.w);
  return sigma_norm(params) * std::exp(-rw) * std::pow(2.0 * rw, params.k - params.W()) *
         polyfn::laguerre(params.m, 2.0 * params.k - 1.0, 2.0 * rw);
}

RadialForm u_form(const PiBasisParams& params) {
  params.validate();
  const auto lag = polyfn::laguerre_coefficients(params.k, params.l + 0.5);
  const double front = pi_norm(params) * std::pow(params.M, 0.5 * (params.l + 1.0));
  std::map<int, double> coeffs;
  for (std::size_t j = 0; j < lag.size(); ++j) {
    coeffs[2 * static_cast<int>(j)] = front * lag[j] * std::pow(params.M, static_cast<double>(j));
  }
  return {params.l + 1.0, 0.5 * params.M, 2, std::move(coeffs)};
}

RadialForm e_form(const SigmaBasisParams& params) {
  params.validate();
  const int w = integer_w(params.w);
  const double kw = params.k - params.W();
  const auto lag = polyfn::laguerre_coefficients(params.m, 2.0 * params.k - 1.0);
  const double front = sigma_norm(params) * std::pow(2.0, kw);
  std::map<int, double> coeffs;
  for (std::size_t j = 0; j < lag.size(); ++j) {
    coeffs[w * static_cast<int>(j)] = front * lag[j] * std::pow(2.0, static_cast<double>(j));
  }
  return {params.w * kw, 1.0, w, std::move(coeffs)};
}

// -------------------------------------------------------------- generators

RadialForm apply_pi_generator(PiGenerator which, double M, double l, const RadialForm& f) {
  const RadialForm df = f.derivative();
  const RadialForm kinetic =
      (1.0 / (4.0 * M)) * (f.times_power(-2).scaled(l * (l + 1.0)) - df.derivative());
  const RadialForm harmonic = (M / 4.0) * f.times_power(2);
  const RadialForm dilation = 0.5 * (df.times_power(1) + f.scaled(0.5));
  switch (which) {
    case PiGenerator::L0:
      return kinetic + harmonic;
    case PiGenerator::Lplus:
      return harmonic - kinetic - dilation;
    case PiGenerator::Lminus:
      return harmonic - kinetic + dilation;
    case PiGenerator::L2:
      return dilation.scaled(-1.0);
  }
  throw DomainError("apply_pi_generator: unknown generator");
}

RadialForm apply_pi_generator(PiGenerator which, const PiBasisParams& params) {
  return apply_pi_generator(which, params.M, params.l, u_form(params));
}

RadialForm apply_sigma_generator(SigmaGenerator which, double w, double k, const RadialForm& f) {
  const int wi = integer_w(w);
  const double W = (w + 1.0) / (2.0 * w);
  const double xi = k * (k - 1.0) - W * (W - 1.0);

  const RadialForm df = f.derivative();
  // p_r^2 f = -(f'' + 2 f'/r)
  const RadialForm pr2 = (df.derivative() + df.times_power(-1).scaled(2.0)).scaled(-1.0);
  const RadialForm kinetic = pr2.times_power(2 - wi).scaled(1.0 / (w * w));
  const RadialForm centrifugal = f.times_power(-wi).scaled(xi);
  const RadialForm confining = f.times_power(wi);
  const RadialForm idilation = (df.times_power(1) + f.scaled(0.5 * (w + 1.0))).scaled(1.0 / w);

  const RadialForm j0 = 0.5 * (kinetic + centrifugal + confining);
  // Sign of the xi r^-w term: DESIGN GL-4. J2 is iJ2: DESIGN GL-5.
  const RadialForm j1 = 0.5 * (kinetic + centrifugal - confining);
  switch (which) {
    case SigmaGenerator::J0:
      return j0;
    case SigmaGenerator::J1:
      return j1;
    case SigmaGenerator::J2:
      return idilation;
    case SigmaGenerator::Jplus:
      return j1 + idilation;
    case SigmaGenerator::Jminus:
      return j1 - idilation;
  }
  throw DomainError("apply_sigma_generator: unknown generator");
}

RadialForm apply_sigma_generator(SigmaGenerator which, const SigmaBasisParams& params) {
  return apply_sigma_generator(which, params.w, params.k, e_form(params));
}

// ---------------------------------------------------------- residual checks

namespace {

double max_residual(const RadialForm& lhs, const RadialForm& rhs, std::span<const double> radii) {
  double worst = 0.0;
  for (double r : radii) worst = std::max(worst, std::abs(lhs(r) - rhs(r)));
  return worst;
}

}  // namespace

double casimir_residual(const PiBasisParams& params, std::span<const double> radii) {
  const RadialForm u = u_form(params);
  const auto L = [&](PiGenerator g, const RadialForm& f) {
    return apply_pi_generator(g, params.M, params.l, f);
  };
  const RadialForm c = L(PiGenerator::L0, L(PiGenerator::L0, u)) -
                       0.5 * (L(PiGenerator::Lplus, L(PiGenerator::Lminus, u)) +
                              L(PiGenerator::Lminus, L(PiGenerator::Lplus, u)));
  const double d = params.lowest_weight();
  return max_residual(c, u.scaled(d * (d - 1.0)), radii);
}

double casimir_residual(const SigmaBasisParams& params, std::span<const double> radii) {
  const RadialForm e = e_form(params);
  const auto J = [&](SigmaGenerator g, const RadialForm& f) {
    return apply_sigma_generator(g, params.w, params.k, f);
  };
  const RadialForm c = J(SigmaGenerator::J0, J(SigmaGenerator::J0, e)) -
                       0.5 * (J(SigmaGenerator::Jplus, J(SigmaGenerator::Jminus, e)) +
                              J(SigmaGenerator::Jminus, J(SigmaGenerator::Jplus, e)));
  return max_residual(c, e.scaled(params.k * (params.k - 1.0)), radii);
}

double eigen_ladder_residual(const PiBasisParams& params, std::span<const double> radii) {
  const RadialForm u = u_form(params);
  const double d = params.lowest_weight();
  double worst = max_residual(apply_pi_generator(PiGenerator::L0, params.M, params.l, u),
                              u.scaled(d + params.k), radii);

  PiBasisParams up = params;
  up.k += 1;
  worst = std::max(worst, max_residual(apply_pi_generator(PiGenerator::Lplus, params.M, params.l, u),
                                       u_form(up).scaled(mu_plus(d, params.k)), radii));

  const RadialForm lowered = apply_pi_generator(PiGenerator::Lminus, params.M, params.l, u);
  if (params.k == 0) {
    worst = std::max(worst, max_residual(lowered, u.zero(), radii));
  } else {
    PiBasisParams down = params;
    down.k -= 1;
    worst = std::max(worst, max_residual(lowered, u_form(down).scaled(mu_minus(d, params.k)), radii));
  }
  return worst;
}

double eigen_ladder_residual(const SigmaBasisParams& params, std::span<const double> radii) {
  const RadialForm e = e_form(params);
  const double k = params.k;
  double worst = max_residual(apply_sigma_generator(SigmaGenerator::J0, params.w, k, e),
                              e.scaled(params.m + k), radii);

  SigmaBasisParams up = params;
  up.m += 1;
  worst = std::max(worst, max_residual(apply_sigma_generator(SigmaGenerator::Jplus, params.w, k, e),
                                       e_form(up).scaled(mu_plus(k, params.m)), radii));

  const RadialForm lowered = apply_sigma_generator(SigmaGenerator::Jminus, params.w, k, e);
  if (params.m == 0) {
    worst = std::max(worst, max_residual(lowered, e.zero(), radii));
  } else {
    SigmaBasisParams down = params;
    down.m -= 1;
    worst = std::max(worst, max_residual(lowered, e_form(down).scaled(mu_minus(k, params.m)), radii));
  }
  return worst;
}

// ---------------------------------------------------------- identification

double CircleIdentification::max_abs_discrepancy() const {
  const double c = std::abs(circle);
  return std::max(std::abs(c - std::abs(via_sigma)), std::abs(c - std::abs(via_pi)));
}

double CircleIdentification::max_signed_discrepancy() const {
  return std::max(std::abs(circle - sigma_sign * via_sigma), std::abs(circle - pi_sign * via_pi));
}

CircleIdentification identify_circle_spectrum(int n, double a) {
  if (n < 0) throw DomainError("identify_circle_spectrum: n must be nonnegative");
  if (!(a > 0.0)) throw DomainError("identify_circle_spectrum: a must be positive");
  CircleIdentification out;
  out.circle = spectra::circle_eigenvalue(n, a);
  out.via_sigma = a * std::sqrt(a) * e_basis({2.0, 0.5, n}, a);
  out.via_pi = std::sqrt(a) * u_basis({2.0, n, -0.5}, a);
  out.sigma_sign = (n % 2 == 0) ? 1 : -1;
  out.pi_sign = 1;
  return out;
}

RadialForm dilate_pi(const RadialForm& f, double t) {
  return f.dilated(std::exp(0.5 * t)).scaled(std::exp(0.25 * t));
}

RadialForm dilate_sigma(const RadialForm& f, double t) {
  const double w = f.w();
  return f.dilated(std::exp(t / w)).scaled(std::exp(t * (w + 1.0) / (2.0 * w)));
}

}  // namespace wigqpi::glbasis
