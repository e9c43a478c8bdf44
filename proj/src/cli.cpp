#include "wigqpi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "wigqpi/errors.hpp"
#include "wigqpi/scaling.hpp"
#include "wigqpi/spectra.hpp"
#include "wigqpi/wigner.hpp"

namespace wigqpi::cli {

using nlohmann::json;

namespace {

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateFile {
  std::optional<spectra::FockWeights> fock_weights;
  std::optional<wigner::HermiteState> hermite;
};

constexpr double kStateTolerance = 1e-9;

// DESIGN CLI-4
StateFile load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw StateFileError("state file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw StateFileError("state file must hold a JSON object");
  const bool has_weights = doc.contains("fock_weights");
  const bool has_coeffs = doc.contains("hermite_coeffs");
  if (has_weights == has_coeffs) {
    throw StateFileError("state file needs exactly one of 'fock_weights' or 'hermite_coeffs'");
  }
  const json& arr = has_weights ? doc["fock_weights"] : doc["hermite_coeffs"];
  if (!arr.is_array() || arr.empty()) throw StateFileError("state coefficients must be a nonempty array");
  std::vector<double> values;
  for (const auto& v : arr) {
    if (!v.is_number()) throw StateFileError("state coefficients must be numbers");
    values.push_back(v.get<double>());
  }
  StateFile state;
  try {
    if (has_weights) {
      state.fock_weights = spectra::FockWeights::from(std::move(values), kStateTolerance);
    } else {
      state.hermite = wigner::HermiteState::from(std::move(values), kStateTolerance);
    }
  } catch (const DomainError& e) {
    throw StateFileError(std::string("state file: ") + e.what());
  }
  return state;
}

spectra::RegionKind parse_region(const std::string& s) {
  return s == "circle" ? spectra::RegionKind::Circle : spectra::RegionKind::Disk;
}

// DESIGN CLI-1
std::string csv_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::pair<double, double> parse_range(const std::string& text, const char* name) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError(std::string(name) + " must be 'lo,hi'");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be 'lo,hi'");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CommonOptions {
  std::string format = "csv";
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  bool timestamp = false;

  quadrature::QuadratureSpec spec() const {
    quadrature::QuadratureSpec s;
    s.abs_tol = abs_tol;
    s.rel_tol = rel_tol;
    s.validate();
    return s;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--abs-tol", opts.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
  cmd->add_option("--rel-tol", opts.rel_tol, "Relative quadrature tolerance")->capture_default_str();
  cmd->add_flag("--timestamp", opts.timestamp, "Add a generation timestamp outside the payload (JSON)");
}

// DESIGN CLI-3
json envelope(const std::string& command, json parameters, const CommonOptions& opts, json results) {
  json payload;
  payload["command"] = command;
  payload["parameters"] = std::move(parameters);
  payload["tolerances"] = {{"abs_tol", opts.abs_tol},
                           {"rel_tol", opts.rel_tol},
                           {"max_subdivisions", quadrature::QuadratureSpec{}.max_subdivisions}};
  payload["conventions_hash"] = scaling::default_convention_report().hash();
  payload["results"] = std::move(results);
  json doc;
  doc["payload_hash"] = fnv1a_hex(payload.dump());
  doc["payload"] = std::move(payload);
  if (opts.timestamp) doc["timestamp"] = utc_timestamp();
  return doc;
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ------------------------------------------------------------- commands

int cmd_spectrum(const std::string& region, double radius, int nmax, const CommonOptions& opts,
                 std::ostream& out) {
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  if (nmax < 0) throw DomainError("--nmax must be nonnegative");
  const auto s = spectra::spectrum(parse_region(region), radius, nmax, opts.spec());
  if (opts.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= s.nmax(); ++n) {
      rows.push_back({{"n", n}, {"lambda", s.values[n]}, {"error_estimate", s.error_estimates[n]}});
    }
    emit_json(out, envelope("spectrum", {{"region", region}, {"radius", radius}, {"nmax", nmax}}, opts,
                            std::move(rows)));
  } else {
    out << "n,lambda,error_estimate\n";
    for (int n = 0; n <= s.nmax(); ++n) {
      out << n << ',' << csv_number(s.values[n]) << ',' << csv_number(s.error_estimates[n]) << '\n';
    }
  }
  return kOk;
}

int cmd_bounds(const std::string& region, double radius, int nmax, const CommonOptions& opts,
               std::ostream& out) {
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  if (nmax < 1) throw DomainError("--nmax must be at least 1");
  const auto b = spectra::bounds(parse_region(region), radius, nmax, opts.spec());
  if (opts.format == "json") {
    json r = {{"lower", b.lower},           {"upper", b.upper},           {"arg_lower", b.arg_lower},
              {"arg_upper", b.arg_upper},   {"truncation", b.truncation}, {"tail_bound", b.tail_bound},
              {"certified", b.certified},   {"tail_envelope", b.tail_envelope}};
    emit_json(out, envelope("bounds", {{"region", region}, {"radius", radius}, {"nmax", nmax}}, opts,
                            std::move(r)));
  } else {
    out << "lower,upper,arg_lower,arg_upper,truncation,tail_bound,certified,tail_envelope\n"
        << csv_number(b.lower) << ',' << csv_number(b.upper) << ',' << b.arg_lower << ',' << b.arg_upper
        << ',' << b.truncation << ',' << csv_number(b.tail_bound) << ',' << (b.certified ? "true" : "false")
        << ',' << csv_number(b.tail_envelope) << '\n';
  }
  return kOk;
}

struct QpiRow {
  std::string quantity;
  double value;
  double error_estimate;
};

int cmd_qpi(const std::string& region, double radius, const std::string& state_path,
            const CommonOptions& opts, std::ostream& out) {
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  const StateFile state = load_state(state_path);
  const auto kind = parse_region(region);
  const auto spec = opts.spec();

  const spectra::FockWeights weights = state.fock_weights ? *state.fock_weights : state.hermite->fock_weights();
  const int nmax = static_cast<int>(weights.size()) - 1;
  const auto s = spectra::spectrum(kind, radius, nmax, spec);
  double spectral_err = 0.0;
  for (std::size_t n = 0; n < weights.size(); ++n) spectral_err += weights.values()[n] * s.error_estimates[n];

  std::vector<QpiRow> rows;
  rows.push_back({"spectral", spectra::qpi(weights, s), spectral_err});
  if (state.hermite) {
    double oracle = 0.0;
    double oracle_err = 0.0;
    if (kind == spectra::RegionKind::Disk) {
      const auto r = wigner::qpi_oracle_disk_result(*state.hermite, radius, spec);
      oracle = quadrature::require_converged(r, "qpi oracle");
      oracle_err = r.error_estimate;
    } else {
      // Circle: centred radial difference of the disk oracle.
      constexpr double h = 1e-3;
      const auto hi = wigner::qpi_oracle_disk_result(*state.hermite, radius + h, spec);
      const auto lo = wigner::qpi_oracle_disk_result(*state.hermite, radius - h, spec);
      oracle = (quadrature::require_converged(hi, "qpi oracle") -
                quadrature::require_converged(lo, "qpi oracle")) /
               (2.0 * h);
      oracle_err = (hi.error_estimate + lo.error_estimate) / (2.0 * h);
    }
    rows.push_back({"oracle", oracle, oracle_err});
    rows.push_back({"discrepancy", std::abs(oracle - rows.front().value), oracle_err + spectral_err});
  }

  if (opts.format == "json") {
    json r = json::object();
    for (const auto& row : rows) r[row.quantity] = {{"value", row.value}, {"error_estimate", row.error_estimate}};
    emit_json(out, envelope("qpi",
                            {{"region", region},
                             {"radius", radius},
                             {"state_kind", state.hermite ? "hermite_coeffs" : "fock_weights"}},
                            opts, std::move(r)));
  } else {
    out << "quantity,value,error_estimate\n";
    for (const auto& row : rows) {
      out << row.quantity << ',' << csv_number(row.value) << ',' << csv_number(row.error_estimate) << '\n';
    }
  }
  return kOk;
}

int cmd_scale_check(const std::string& region, double radius, double xi, int mmax, int trunc,
                    const CommonOptions& opts, std::ostream& out) {
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  if (!(xi > 0.0)) throw DomainError("--xi must be positive");
  if (xi == 1.0) throw DomainError("--xi = 1 is the identity scaling; nothing to check");
  if (mmax < 0) throw DomainError("--mmax must be nonnegative");
  if (trunc != 0 && trunc < mmax) throw DomainError("--trunc must be >= --mmax");

  const auto& report = scaling::default_convention_report();
  const std::optional<scaling::Convention> conv = report.resolved;
  const std::optional<int> t = trunc > 0 ? std::optional<int>(trunc) : std::nullopt;

  std::vector<scaling::ScaleCheckRow> rows;
  const auto spec = opts.spec();
  for (auto kind : {spectra::RegionKind::Circle, spectra::RegionKind::Disk}) {
    if (region != "both" && parse_region(region) != kind) continue;
    auto part = scaling::scale_check(kind, mmax, radius, xi, t, conv, spec);
    rows.insert(rows.end(), part.begin(), part.end());
  }

  if (opts.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"kind", spectra::to_string(r.kind)},
                     {"m", r.m},
                     {"direct", r.direct},
                     {"direct_error", r.direct_error},
                     {"series", r.series},
                     {"series_error", r.series_error},
                     {"discrepancy", r.discrepancy},
                     {"truncation", r.truncation},
                     {"tail_estimate", r.tail_estimate}});
    }
    emit_json(out, envelope("scale-check",
                            {{"region", region},
                             {"radius", radius},
                             {"xi", xi},
                             {"mmax", mmax},
                             {"trunc", trunc},
                             {"conventions_report", "CONVENTIONS.txt"}},
                            opts, std::move(arr)));
  } else {
    out << "kind,m,direct,direct_error,series,series_error,discrepancy,truncation,tail_estimate\n";
    for (const auto& r : rows) {
      out << spectra::to_string(r.kind) << ',' << r.m << ',' << csv_number(r.direct) << ','
          << csv_number(r.direct_error) << ',' << csv_number(r.series) << ',' << csv_number(r.series_error) << ','
          << csv_number(r.discrepancy) << ',' << r.truncation << ',' << csv_number(r.tail_estimate) << '\n';
    }
  }
  return kOk;
}

int cmd_wigner_grid(const std::string& state_path, int fock, const std::string& q_range,
                    const std::string& p_range, double step, const CommonOptions& opts, std::ostream& out,
                    std::ostream& err) {
  if (state_path.empty() == (fock < 0)) throw DomainError("give exactly one of --state or --fock");
  std::optional<wigner::HermiteState> state;
  if (fock >= 0) {
    state = wigner::HermiteState::fock(fock);
  } else {
    StateFile file = load_state(state_path);
    if (!file.hermite) throw StateFileError("wigner-grid needs 'hermite_coeffs' (a pure state)");
    state = *file.hermite;
  }
  wigner::GridSpec g;
  std::tie(g.q_lo, g.q_hi) = parse_range(q_range, "--q-range");
  std::tie(g.p_lo, g.p_hi) = parse_range(p_range, "--p-range");
  g.step = step;
  g.validate();
  const auto grid = wigner::evaluate_grid(*state, g);

  if (opts.format == "json") {
    json values = json::array();
    for (int i = 0; i < g.q_count(); ++i) {
      for (int j = 0; j < g.p_count(); ++j) {
        values.push_back({g.q_at(i), g.p_at(j), grid.values[static_cast<std::size_t>(i) * g.p_count() + j]});
      }
    }
    json r = {{"min", grid.min},
              {"max", grid.max},
              {"argmin", {grid.q_at_min, grid.p_at_min}},
              {"argmax", {grid.q_at_max, grid.p_at_max}},
              {"within_bounds", grid.within_bounds},
              {"columns", {"q", "p", "W"}},
              {"values", std::move(values)}};
    json params = {{"q_range", {g.q_lo, g.q_hi}}, {"p_range", {g.p_lo, g.p_hi}}, {"step", step}};
    params["state"] = json(std::vector<double>(state->coeffs().begin(), state->coeffs().end()));
    emit_json(out, envelope("wigner-grid", std::move(params), opts, std::move(r)));
  } else {
    grid.write_csv(out);
    err << "min=" << csv_number(grid.min) << " at (" << csv_number(grid.q_at_min) << ','
        << csv_number(grid.p_at_min) << ") max=" << csv_number(grid.max) << " at ("
        << csv_number(grid.q_at_max) << ',' << csv_number(grid.p_at_max)
        << ") within_bounds=" << (grid.within_bounds ? "true" : "false") << '\n';
  }
  return grid.within_bounds ? kOk : kFailure;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Exit codes: DESIGN CLI-2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner quasiprobability integrals over disks and circles"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string region = "disk";
  double radius = 1.0;
  int nmax = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Disk or circle eigenvalues lambda_0..lambda_nmax");
  spectrum->add_option("--region", region)->check(CLI::IsMember({"disk", "circle"}))->required();
  spectrum->add_option("--radius", radius)->required();
  spectrum->add_option("--nmax", nmax)->required();
  add_common(spectrum, opts);

  int bounds_nmax = 128;
  auto* bounds = app.add_subcommand("bounds", "Extremal eigenvalues (QPI bounds)");
  bounds->add_option("--region", region)->check(CLI::IsMember({"disk", "circle"}))->required();
  bounds->add_option("--radius", radius)->required();
  bounds->add_option("--nmax", bounds_nmax)->capture_default_str();
  add_common(bounds, opts);

  std::string state_path;
  auto* qpi = app.add_subcommand("qpi", "Quasiprobability integral of a state");
  qpi->add_option("--region", region)->check(CLI::IsMember({"disk", "circle"}))->required();
  qpi->add_option("--radius", radius)->required();
  qpi->add_option("--state", state_path, "JSON state file")->required();
  add_common(qpi, opts);

  double xi = 2.0;
  int mmax = 4;
  int trunc = 0;
  std::string scale_region = "both";
  auto* scale = app.add_subcommand("scale-check", "Meixner series vs direct eigenvalues at xi*a");
  scale->add_option("--radius", radius)->required();
  scale->add_option("--xi", xi)->required();
  scale->add_option("--mmax", mmax)->capture_default_str();
  scale->add_option("--trunc", trunc, "Series truncation (0: automatic)")->capture_default_str();
  scale->add_option("--region", scale_region)->check(CLI::IsMember({"disk", "circle", "both"}))->capture_default_str();
  add_common(scale, opts);

  int fock = -1;
  std::string q_range = "-5,5";
  std::string p_range = "-5,5";
  double step = 0.05;
  auto* grid = app.add_subcommand("wigner-grid", "Wigner function on a (q, p) grid");
  grid->add_option("--state", state_path, "JSON state file with hermite_coeffs");
  grid->add_option("--fock", fock, "Fock state index instead of a state file");
  grid->add_option("--q-range", q_range)->capture_default_str();
  grid->add_option("--p-range", p_range)->capture_default_str();
  grid->add_option("--step", step)->capture_default_str();
  add_common(grid, opts);

  auto* conventions = app.add_subcommand("conventions", "Print the CONVENTIONS report");

  std::string fixture_dir;
  auto* fixtures = app.add_subcommand("fixtures", "Regenerate golden fixture files");
  fixtures->add_option("--dir", fixture_dir)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(region, radius, nmax, opts, out);
    if (bounds->parsed()) return cmd_bounds(region, radius, bounds_nmax, opts, out);
    if (qpi->parsed()) return cmd_qpi(region, radius, state_path, opts, out);
    if (scale->parsed()) return cmd_scale_check(scale_region, radius, xi, mmax, trunc, opts, out);
    if (grid->parsed()) return cmd_wigner_grid(state_path, fock, q_range, p_range, step, opts, out, err);
    if (conventions->parsed()) {
      out << scaling::default_convention_report().text();
      return kOk;
    }
    if (fixtures->parsed()) return regenerate_fixtures(fixture_dir, err) ? kOk : kFailure;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ToleranceNotReached& e) {
    err << "error: " << e.what() << '\n';
    return kToleranceNotReached;
  } catch (const ConventionUnresolved& e) {
    err << "error: " << e.what() << '\n';
    return kConventionUnresolved;
  } catch (const AmbiguousConvention& e) {
    err << "error: " << e.what() << '\n';
    return kConventionUnresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace wigqpi::cli
