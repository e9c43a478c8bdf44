#include "wigqpi/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wigqpi/errors.hpp"
#include "wigqpi/glbasis.hpp"

namespace wigqpi::scaling {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

const char* to_string(Direction d) {
  return d == Direction::Direct ? "DIRECT" : "INVERTED";
}

const char* to_string(DiskFactor f) {
  return f == DiskFactor::Unit ? "UNIT" : "JACOBIAN";
}

ScalingParams ScalingParams::make(double xi, const Convention& convention) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("ScalingParams: xi must be positive");
  return {xi, convention.direction, convention.argument};
}

double ScalingParams::r() const {
  const double r_direct = 2.0 * std::log(xi);
  return direction == Direction::Direct ? r_direct : -r_direct;
}

double ScalingParams::c() const { return std::tanh(0.5 * r()); }

double phase(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

ExpansionCoefficients expansion_coefficients(int m, const ScalingParams& params, int trunc) {
  if (m < 0) throw DomainError("expansion_coefficients: m must be nonnegative");
  if (trunc < m) throw DomainError("expansion_coefficients: trunc must be >= m");
  const double c = params.c();
  if (!(std::abs(c) < 1.0)) throw DomainError("expansion_coefficients: |c| must be < 1");

  // DESIGN SCALE-4.
  // c^2 z for z = 1 - 1/c or 1 - 1/c^2, written to stay finite at c = 0.
  const double c2z = params.argument == polyfn::MeixnerArgument::OneMinusInvC ? c * c - c : c * c - 1.0;
  const double norm = phase(m) * std::sqrt(1.0 - c * c);
  constexpr double beta = 1.0;

  ExpansionCoefficients out;
  out.m = m;
  out.truncation = trunc;
  out.terms.resize(static_cast<std::size_t>(trunc) + 1);
  std::vector<double> c_pow(static_cast<std::size_t>(m + trunc) + 1);
  std::vector<double> z_pow(static_cast<std::size_t>(m) + 1);
  c_pow[0] = 1.0;
  for (std::size_t k = 1; k < c_pow.size(); ++k) c_pow[k] = c_pow[k - 1] * c;
  z_pow[0] = 1.0;
  for (std::size_t k = 1; k < z_pow.size(); ++k) z_pow[k] = z_pow[k - 1] * c2z;

  double running = 0.0;  // max_{n<=N} |t_n| |c|^{N+1-n}
  for (int n = 0; n <= trunc; ++n) {
    const int top = std::min(n, m);
    double coef = 1.0;
    double sum = 0.0;
    for (int j = 0; j <= top; ++j) {
      if (j > 0) coef *= (j - 1.0 - n) * (j - 1.0 - m) / ((beta + j - 1.0) * j);
      sum += coef * c_pow[m + n - 2 * j] * z_pow[j];
    }
    out.terms[n] = norm * sum;
    running = std::abs(c) * std::max(running, std::abs(out.terms[n]));
  }
  out.tail_estimate = c == 0.0 ? 0.0 : running / (1.0 - std::abs(c));
  return out;
}

// DESIGN SCALE-2
int default_truncation(int m, const ScalingParams& params) {
  if (m < 0) throw DomainError("default_truncation: m must be nonnegative");
  const double c = std::abs(params.c());
  if (c == 0.0) return m;
  const auto full = expansion_coefficients(m, params, std::max(m, kMaxTruncation));
  double running = 0.0;
  for (int n = 0; n <= kMaxTruncation; ++n) {
    const double t = std::abs(full.terms[n]);
    running = c * std::max(running, t);
    const bool decreasing = n == 0 || t <= std::abs(full.terms[n - 1]);
    if (n >= m && decreasing && running / (1.0 - c) < kTailTarget) return n;
  }
  return kMaxTruncation;
}

double apply_expansion(const ExpansionCoefficients& coeffs, std::span<const double> lambdas) {
  const std::size_t count = std::min(coeffs.terms.size(), lambdas.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < count; ++n) sum += coeffs.terms[n] * lambdas[n];
  return sum;
}

double generating_function_m0(double a, double c) {
  // sqrt(1-c^2) 2a e^{-a^2} e^{2a^2 c/(1+c)} / (1+c)
  return std::sqrt(1.0 - c * c) * 2.0 * a * std::exp(-a * a * (1.0 - c) / (1.0 + c)) / (1.0 + c);
}

// ------------------------------------------------------------- conventions

// DESIGN SCALE-1
ConventionReport resolve_conventions(double a, double xi, int trunc,
                                     const quadrature::QuadratureSpec& spec) {
  if (!(a > 0.0)) throw DomainError("resolve_conventions: a must be positive");
  if (!(xi > 0.0) || xi == 1.0) throw DomainError("resolve_conventions: xi must be positive and != 1");

  ConventionReport report;
  report.a = a;
  report.xi = xi;
  report.trunc = trunc;
  if (trunc < report.max_m) throw DomainError("resolve_conventions: trunc too small");

  const auto circle = spectra::spectrum(spectra::RegionKind::Circle, a, trunc, spec);

  std::vector<Convention> passing;
  for (Direction d : {Direction::Direct, Direction::Inverted}) {
    for (polyfn::MeixnerArgument arg :
         {polyfn::MeixnerArgument::OneMinusInvC, polyfn::MeixnerArgument::OneMinusInvCSquared}) {
      const ScalingParams params{xi, d, arg};
      double worst = 0.0;
      for (int m = 0; m <= report.max_m; ++m) {
        const double series = apply_expansion(expansion_coefficients(m, params, trunc), circle.values);
        worst = std::max(worst, std::abs(series - spectra::circle_eigenvalue(m, xi * a)));
      }
      const bool ok = worst < report.pass_tolerance;
      report.candidates.push_back({d, arg, worst, ok});
      if (ok) passing.push_back({d, arg, DiskFactor::Unit});
    }
  }
  if (passing.size() != 1) {
    throw AmbiguousConvention("resolve_conventions: " + std::to_string(passing.size()) +
                              " (direction, argument) candidates passed; expected exactly one");
  }

  const ScalingParams chosen{xi, passing.front().direction, passing.front().argument};
  report.generating_function_residual =
      std::abs(apply_expansion(expansion_coefficients(0, chosen, trunc), circle.values) -
               generating_function_m0(a, chosen.c()));

  const auto disk = spectra::spectrum(spectra::RegionKind::Disk, a, trunc, spec);
  int disk_passing = 0;
  DiskFactor disk_choice = DiskFactor::Unit;
  for (DiskFactor f : {DiskFactor::Unit, DiskFactor::Jacobian}) {
    const double factor = f == DiskFactor::Jacobian ? xi : 1.0;
    double worst = 0.0;
    for (int m = 0; m <= 2; ++m) {
      const double series = factor * apply_expansion(expansion_coefficients(m, chosen, trunc), disk.values);
      worst = std::max(worst, std::abs(series - spectra::disk_eigenvalue(m, xi * a, spec)));
    }
    const bool ok = worst < report.pass_tolerance;
    report.disk_candidates.push_back({f, worst, ok});
    if (ok) {
      ++disk_passing;
      disk_choice = f;
    }
  }
  if (disk_passing != 1) {
    throw AmbiguousConvention("resolve_conventions: " + std::to_string(disk_passing) +
                              " disk prefactor candidates passed; expected exactly one");
  }

  report.resolved = {chosen.direction, chosen.argument, disk_choice};
  return report;
}

const ConventionReport& default_convention_report() {
  static const ConventionReport report = resolve_conventions(1.0, 2.0, 200);
  return report;
}

std::string ConventionReport::canonical() const {
  std::ostringstream os;
  os << "direction=" << to_string(resolved.direction) << '\n'
     << "meixner_argument=" << polyfn::to_string(resolved.argument) << '\n'
     << "disk_factor=" << to_string(resolved.disk_factor) << '\n'
     << "phase=(-1)^m\n";
  return os.str();
}

std::string ConventionReport::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ConventionReport::text() const {
  std::ostringstream os;
  os << "CONVENTIONS\n"
     << "===========\n\n"
     << "Expansion lambda_m(xi a) = N_m sum_n c^n M_n(m, 1; .) lambda_n(a),\n"
     << "N_m = (-1)^m sqrt(1 - c^2) c^m, c = tanh(r/2).\n\n"
     << "Probe: a = " << a << ", xi = " << xi << ", trunc = " << trunc << ", m = 0.." << max_m
     << " (circle), m = 0..2 (disk), pass tolerance " << format_double(pass_tolerance) << "\n\n"
     << "Circle candidates (max |series - lambda_m^C(xi a)|):\n";
  for (const auto& c : candidates) {
    os << "  direction=" << to_string(c.direction) << " meixner_argument=" << polyfn::to_string(c.argument)
       << " residual=" << format_double(c.residual) << (c.passed ? " PASS" : " fail") << '\n';
  }
  os << "\nDisk prefactor candidates (max |series - lambda_m^D(xi a)|):\n";
  for (const auto& c : disk_candidates) {
    os << "  disk_factor=" << to_string(c.factor) << " residual=" << format_double(c.residual)
       << (c.passed ? " PASS" : " fail") << '\n';
  }
  os << "\nm = 0 generating-function check residual: " << format_double(generating_function_residual)
     << "\n\nResolved:\n"
     << canonical() << "hash=" << hash() << '\n';
  return os.str();
}

// --------------------------------------------------------- scaled spectra

namespace {

const Convention& require(const std::optional<Convention>& convention) {
  if (!convention) throw ConventionUnresolved("scaling: conventions have not been resolved");
  return *convention;
}

}  // namespace

std::vector<ScaleCheckRow> scale_check(spectra::RegionKind kind, int mmax, double a, double xi,
                                       std::optional<int> trunc,
                                       const std::optional<Convention>& convention,
                                       const quadrature::QuadratureSpec& spec) {
  const Convention& conv = require(convention);
  if (mmax < 0) throw DomainError("scale_check: mmax must be nonnegative");
  if (!(a > 0.0)) throw DomainError("scale_check: a must be positive");
  const ScalingParams params = ScalingParams::make(xi, conv);

  std::vector<ExpansionCoefficients> rows;
  int widest = 0;
  for (int m = 0; m <= mmax; ++m) {
    const int n = trunc ? *trunc : default_truncation(m, params);
    rows.push_back(expansion_coefficients(m, params, std::max(n, m)));
    widest = std::max(widest, rows.back().truncation);
  }
  const auto base = spectra::spectrum(kind, a, widest, spec);
  // Jacobian of a -> xi a for the disk (DESIGN SCALE-3).
  const double factor =
      (kind == spectra::RegionKind::Disk && conv.disk_factor == DiskFactor::Jacobian) ? xi : 1.0;

  std::vector<ScaleCheckRow> out;
  for (const auto& row : rows) {
    ScaleCheckRow r;
    r.kind = kind;
    r.m = row.m;
    r.series = factor * apply_expansion(row, base.values);
    for (std::size_t n = 0; n < row.terms.size(); ++n) {
      r.series_error += factor * std::abs(row.terms[n]) * base.error_estimates[n];
    }
    if (kind == spectra::RegionKind::Circle) {
      r.direct = spectra::circle_eigenvalue(row.m, xi * a);
    } else {
      const auto q = spectra::disk_eigenvalue_result(row.m, xi * a, spec);
      r.direct = quadrature::require_converged(q, "scale_check");
      r.direct_error = q.error_estimate;
    }
    r.discrepancy = std::abs(r.series - r.direct);
    r.truncation = row.truncation;
    r.tail_estimate = row.tail_estimate;
    out.push_back(r);
  }
  return out;
}

double scaled_spectrum(spectra::RegionKind kind, int m, double a, double xi, std::optional<int> trunc,
                       const std::optional<Convention>& convention,
                       const quadrature::QuadratureSpec& spec) {
  const Convention& conv = require(convention);
  if (m < 0) throw DomainError("scaled_spectrum: m must be nonnegative");
  const ScalingParams params = ScalingParams::make(xi, conv);
  const int n = std::max(m, trunc ? *trunc : default_truncation(m, params));
  const auto row = expansion_coefficients(m, params, n);
  const auto base = spectra::spectrum(kind, a, n, spec);
  // Jacobian of a -> xi a for the disk (DESIGN SCALE-3).
  const double factor =
      (kind == spectra::RegionKind::Disk && conv.disk_factor == DiskFactor::Jacobian) ? xi : 1.0;
  return factor * apply_expansion(row, base.values);
}

std::vector<std::vector<double>> coefficient_matrix(int mmax, const ScalingParams& params, int trunc) {
  std::vector<std::vector<double>> out;
  for (int m = 0; m <= mmax; ++m) out.push_back(expansion_coefficients(m, params, trunc).terms);
  return out;
}

double dilation_check(int n, double a, double t) {
  if (n < 0) throw DomainError("dilation_check: n must be nonnegative");
  if (!(a > 0.0)) throw DomainError("dilation_check: a must be positive");
  const double xi = std::exp(0.5 * t);
  const double target = spectra::circle_eigenvalue(n, xi * a);

  const auto u = glbasis::u_form({2.0, n, -0.5});
  const auto e = glbasis::e_form({2.0, 0.5, n});
  const double sign = phase(n);

  const double u_scaled = std::exp(-0.25 * t) * glbasis::dilate_pi(u, t)(a);
  const double e_scaled = std::exp(-0.75 * t) * glbasis::dilate_sigma(e, t)(a);
  const double via_pi = std::sqrt(xi * a) * u_scaled;
  const double via_sigma = sign * xi * a * std::sqrt(xi * a) * e_scaled;

  const double lhs = std::exp(0.5 * t) * glbasis::dilate_pi(u.times_power(-1), t)(a);
  const double rhs = sign * glbasis::dilate_sigma(e, t)(a);

  return std::max({std::abs(via_pi - target), std::abs(via_sigma - target), std::abs(lhs - rhs)});
}

}  // namespace wigqpi::scaling
