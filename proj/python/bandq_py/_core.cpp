#include <pybind11/pybind11.h>

#include "bandq/io.hpp"

namespace py = pybind11;

namespace {

bandq::PipelineOptions make_opts(bool force_generic, int truncation_override) {
  bandq::PipelineOptions opt;
  opt.force_generic_idempotents = force_generic;
  if (truncation_override > 0) opt.truncation_override = truncation_override;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quiver presentations of integral band algebras";

  py::register_exception<bandq::Error>(m, "BandError");

  m.def(
      "analyze",
      [](const std::string& spec) {
        return bandq::analyze_report(bandq::build_from_spec(spec)).dump();
      },
      py::arg("spec"), "band + support lattice report as a JSON string");

  m.def(
      "present",
      [](const std::string& spec, bool force_generic, int truncation_override) {
        return bandq::present_report(bandq::build_from_spec(spec),
                                     make_opts(force_generic,
                                               truncation_override))
            .dump();
      },
      py::arg("spec"), py::arg("force_generic") = false,
      py::arg("truncation_override") = -1,
      "bound quiver presentation report as a JSON string");

  m.def(
      "verify",
      [](const std::string& spec, bool force_generic) {
        return bandq::verify_report(bandq::build_from_spec(spec),
                                    make_opts(force_generic, -1))
            .dump();
      },
      py::arg("spec"), py::arg("force_generic") = false,
      "theorem-verification battery as a JSON string");

  m.def(
      "cw",
      [](const std::string& spec) {
        return bandq::cw_report_json(bandq::build_from_spec(spec), {}).dump();
      },
      py::arg("spec"), "CW left-regular-band theorem check as a JSON string");

  m.def(
      "quiver_dot",
      [](const std::string& spec) {
        return bandq::quiver_dot_spec(bandq::build_from_spec(spec));
      },
      py::arg("spec"), "quiver in DOT format");
}
