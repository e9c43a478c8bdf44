#include "wigqpi/polyfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigqpi/errors.hpp"

namespace wigqpi::polyfn {

namespace {

void require_degree(int n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": degree must be nonnegative, got " + std::to_string(n));
  }
}

}  // namespace

// Upward recurrence (DESIGN POLY-1).
double laguerre(int n, double alpha, double x) {
  require_degree(n, "laguerre");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_all(int nmax, double alpha, double x) {
  require_degree(nmax, "laguerre_all");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 1.0 + alpha - x;
  for (int k = 1; k < nmax; ++k) {
    out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

double laguerre_derivative(int n, double alpha, double x) {
  require_degree(n, "laguerre_derivative");
  if (n == 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, x);
}

std::vector<double> laguerre_coefficients(int n, double alpha) {
  require_degree(n, "laguerre_coefficients");
  // c_0 = (alpha+1)_n / n!, c_{j+1} = -c_j (n-j) / ((j+1)(alpha+j+1))
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  double c0 = 1.0;
  for (int i = 1; i <= n; ++i) c0 *= (alpha + i) / i;
  c[0] = c0;
  for (int j = 0; j < n; ++j) {
    c[j + 1] = -c[j] * (n - j) / ((j + 1.0) * (alpha + j + 1.0));
  }
  return c;
}

double hermite_normalized(int n, double x) {
  require_degree(n, "hermite_normalized");
  const double h0 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  double prev = h0;
  if (n == 0) return prev;
  double cur = std::numbers::sqrt2 * x * h0;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_functions_all(int nmax, double x) {
  require_degree(nmax, "hermite_functions_all");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1);
  out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (nmax == 0) return out;
  out[1] = std::numbers::sqrt2 * x * out[0];
  for (int k = 1; k < nmax; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
  }
  return out;
}

double hermite_function(int n, double x) {
  return hermite_functions_all(n, x).back();
}

double pochhammer(double alpha, int n) {
  require_degree(n, "pochhammer");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= alpha + i;
  return p;
}

double hypergeometric_terminating(int n, int m, double beta, double z) {
  require_degree(n, "hypergeometric_terminating");
  require_degree(m, "hypergeometric_terminating");
  const int top = std::min(n, m);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < top; ++j) {
    // ratio of consecutive terms: (-n+j)(-m+j) z / ((beta+j)(j+1))
    term *= (j - n) * static_cast<double>(j - m) * z / ((beta + j) * (j + 1.0));
    sum += term;
  }
  return sum;
}

double meixner_argument(MeixnerArgument argument, double c) {
  if (c == 0.0) throw DomainError("meixner_argument: c must be nonzero");
  switch (argument) {
    case MeixnerArgument::OneMinusInvC:
      return 1.0 - 1.0 / c;
    case MeixnerArgument::OneMinusInvCSquared:
      return 1.0 - 1.0 / (c * c);
  }
  throw DomainError("meixner_argument: unknown convention");
}

double meixner(const MeixnerSpec& spec, double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw DomainError("meixner: c must lie in (0, 1), got " + std::to_string(c));
  }
  if (!(spec.beta > 0.0)) throw DomainError("meixner: beta must be positive");
  return hypergeometric_terminating(spec.n, spec.m, spec.beta, meixner_argument(spec.argument, c));
}

const char* to_string(MeixnerArgument argument) {
  switch (argument) {
    case MeixnerArgument::OneMinusInvC:
      return "ONE_MINUS_INV_C";
    case MeixnerArgument::OneMinusInvCSquared:
      return "ONE_MINUS_INV_C_SQUARED";
  }
  return "?";
}

}  // namespace wigqpi::polyfn
