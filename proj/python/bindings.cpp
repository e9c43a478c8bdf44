#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wigqpi/cli.hpp"
#include "wigqpi/errors.hpp"
#include "wigqpi/polyfn.hpp"
#include "wigqpi/scaling.hpp"
#include "wigqpi/spectra.hpp"
#include "wigqpi/wigner.hpp"

namespace py = pybind11;
using namespace wigqpi;

namespace {

spectra::RegionKind region(const std::string& name) {
  if (name == "disk") return spectra::RegionKind::Disk;
  if (name == "circle") return spectra::RegionKind::Circle;
  throw DomainError("region must be 'disk' or 'circle'");
}

quadrature::QuadratureSpec tolerances(double abs_tol, double rel_tol) {
  quadrature::QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.rel_tol = rel_tol;
  spec.validate();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_wigqpi, m) {
  m.doc() = "Disk and circle operator spectra, QPI bounds and the Meixner scaling identity";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ToleranceNotReached>(m, "ToleranceNotReached", PyExc_RuntimeError);
  py::register_exception<AmbiguousConvention>(m, "AmbiguousConvention", PyExc_RuntimeError);
  py::register_exception<ConventionUnresolved>(m, "ConventionUnresolved", PyExc_RuntimeError);
  py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_RuntimeError);

  m.def("laguerre", &polyfn::laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
  m.def(
      "meixner",
      [](int n, int mm, double beta, double c) {
        return polyfn::meixner(
            polyfn::MeixnerSpec(n, mm, beta, polyfn::MeixnerArgument::OneMinusInvCSquared), c);
      },
      py::arg("n"), py::arg("m"), py::arg("beta"), py::arg("c"),
      "M_n(m, beta; 1 - 1/c^2), the resolved argument convention.");

  m.def("circle_eigenvalue", &spectra::circle_eigenvalue, py::arg("n"), py::arg("a"));
  m.def(
      "disk_eigenvalue",
      [](int n, double a, double abs_tol, double rel_tol) {
        return spectra::disk_eigenvalue(n, a, tolerances(abs_tol, rel_tol));
      },
      py::arg("n"), py::arg("a"), py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10);
  m.def(
      "spectrum",
      [](const std::string& kind, double a, int nmax) { return spectra::spectrum(region(kind), a, nmax).values; },
      py::arg("region"), py::arg("a"), py::arg("nmax"));
  m.def(
      "qpi",
      [](std::vector<double> weights, const std::string& kind, double a) {
        auto w = spectra::FockWeights::from(std::move(weights), 1e-9);
        return spectra::qpi(w, spectra::spectrum(region(kind), a, static_cast<int>(w.size()) - 1));
      },
      py::arg("fock_weights"), py::arg("region"), py::arg("a"));
  m.def(
      "bounds",
      [](const std::string& kind, double a, int nmax) {
        const auto b = spectra::bounds(region(kind), a, nmax);
        py::dict d;
        d["lower"] = b.lower;
        d["upper"] = b.upper;
        d["arg_lower"] = b.arg_lower;
        d["arg_upper"] = b.arg_upper;
        d["truncation"] = b.truncation;
        d["tail_bound"] = b.tail_bound;
        d["certified"] = b.certified;
        d["tail_envelope"] = b.tail_envelope;
        return d;
      },
      py::arg("region"), py::arg("a"), py::arg("nmax") = 128);

  m.def(
      "scaled_spectrum",
      [](const std::string& kind, int mm, double a, double xi, std::optional<int> trunc) {
        return scaling::scaled_spectrum(region(kind), mm, a, xi, trunc,
                                        scaling::default_convention_report().resolved);
      },
      py::arg("region"), py::arg("m"), py::arg("a"), py::arg("xi"), py::arg("trunc") = py::none());
  m.def(
      "scale_check",
      [](const std::string& kind, int mmax, double a, double xi) {
        py::list rows;
        for (const auto& r : scaling::scale_check(region(kind), mmax, a, xi, std::nullopt,
                                                  scaling::default_convention_report().resolved)) {
          py::dict d;
          d["m"] = r.m;
          d["direct"] = r.direct;
          d["series"] = r.series;
          d["series_error"] = r.series_error;
          d["direct_error"] = r.direct_error;
          d["discrepancy"] = r.discrepancy;
          d["truncation"] = r.truncation;
          rows.append(d);
        }
        return rows;
      },
      py::arg("region"), py::arg("mmax"), py::arg("a"), py::arg("xi"));
  m.def("conventions_report", [] { return scaling::default_convention_report().text(); });
  m.def("conventions_hash", [] { return scaling::default_convention_report().hash(); });

  m.def("fock_wigner", &wigner::fock_wigner, py::arg("n"), py::arg("q"), py::arg("p"));
  m.def(
      "wigner_value",
      [](std::vector<double> coeffs, double q, double p) {
        return wigner::wigner_value(wigner::HermiteState::from(std::move(coeffs)), q, p);
      },
      py::arg("hermite_coeffs"), py::arg("q"), py::arg("p"));
  m.def(
      "qpi_oracle_disk",
      [](std::vector<double> coeffs, double a) {
        return wigner::qpi_oracle_disk(wigner::HermiteState::from(std::move(coeffs)), a);
      },
      py::arg("hermite_coeffs"), py::arg("a"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
