#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "wigqpi/cli.hpp"
#include "wigqpi/scaling.hpp"

namespace wigqpi::cli {

using nlohmann::json;

namespace {

struct FixtureDef {
  std::string name;
  std::vector<std::string> argv;
  json tolerances;
};

std::string radius_label(double a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

// Per-field tolerances (DESIGN FIX-2); each file stores the conventions
// hash (DESIGN FIX-1).
std::vector<FixtureDef> fixture_set() {
  std::vector<FixtureDef> defs;
  const json spectrum_tol = {{"default", 1e-12}, {"error_estimate", 1e-9}};
  for (const char* region : {"disk", "circle"}) {
    for (double a : {0.5, 1.0, 2.0}) {
      defs.push_back({std::string("spectrum_") + region + "_a" + radius_label(a),
                      {"spectrum", "--region", region, "--radius", radius_label(a), "--nmax", "10", "--format",
                       "json"},
                      spectrum_tol});
    }
  }
  defs.push_back({"scale_check_a1_xi2",
                  {"scale-check", "--radius", "1", "--xi", "2", "--mmax", "4", "--format", "json"},
                  {{"default", 1e-12},
                   {"discrepancy", 1e-9},
                   {"tail_estimate", 1e-9},
                   {"direct_error", 1e-9},
                   {"series_error", 1e-9}}});
  for (const char* region : {"disk", "circle"}) {
    defs.push_back({std::string("bounds_") + region + "_a1",
                    {"bounds", "--region", region, "--radius", "1", "--format", "json"},
                    {{"default", 1e-12}, {"tail_envelope", 1e-9}}});
  }
  return defs;
}

// lambda_0 and lambda_1 in closed form.
double closed_form(const std::string& region, int n, double a) {
  const double g = std::exp(-a * a);
  if (region == "circle") return n == 0 ? 2.0 * a * g : -2.0 * a * g * (1.0 - 2.0 * a * a);
  return n == 0 ? 1.0 - g : (1.0 - g) - 2.0 * a * a * g;
}

bool check_fixture(const FixtureDef& def, const json& payload, std::ostream& log) {
  const std::string& cmd = payload.at("command").get_ref<const std::string&>();
  const json& results = payload.at("results");
  if (cmd == "spectrum") {
    const std::string region = payload["parameters"]["region"];
    const double a = payload["parameters"]["radius"];
    for (int n = 0; n < 2; ++n) {
      const double got = results.at(n).at("lambda");
      if (std::abs(got - closed_form(region, n, a)) > 1e-12) {
        log << def.name << ": lambda_" << n << " disagrees with its closed form\n";
        return false;
      }
    }
  } else if (cmd == "scale-check") {
    for (const auto& row : results) {
      if (row.at("discrepancy").get<double>() > 1e-8) {
        log << def.name << ": scale-check discrepancy too large at m=" << row["m"] << '\n';
        return false;
      }
    }
  } else if (cmd == "bounds") {
    if (!(results.at("lower").get<double>() <= results.at("upper").get<double>())) {
      log << def.name << ": lower > upper\n";
      return false;
    }
  }
  return true;
}

}  // namespace

// DESIGN FIX-3
bool regenerate_fixtures(const std::string& dir, std::ostream& log) {
  std::vector<std::pair<std::string, json>> staged;
  for (const auto& def : fixture_set()) {
    std::ostringstream out;
    std::ostringstream err;
    if (run(def.argv, out, err) != 0) {
      log << def.name << ": command failed: " << err.str();
      return false;
    }
    const json doc = json::parse(out.str());
    if (!check_fixture(def, doc.at("payload"), log)) return false;
    json fixture = {{"argv", def.argv},
                    {"tolerances", def.tolerances},
                    {"conventions_hash", scaling::default_convention_report().hash()},
                    {"expected", doc.at("payload")}};
    staged.emplace_back(def.name, std::move(fixture));
  }
  std::filesystem::create_directories(dir);
  for (const auto& [name, fixture] : staged) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    std::ofstream os(path);
    os << fixture.dump(2) << '\n';
    if (!os) {
      log << "cannot write " << path.string() << '\n';
      return false;
    }
  }
  log << "wrote " << staged.size() << " fixtures to " << dir << '\n';
  return true;
}

}  // namespace wigqpi::cli
