// Python bindings. Structured results cross the boundary as JSON text and are decoded by
// the package __init__, so the C++ side needs no pybind11 type casters for them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "susy/cli.hpp"
#include "susy/engine.hpp"
#include "susy/pdm.hpp"

namespace py = pybind11;

namespace {

std::string run_json(const std::string& config) {
    return susy::cli::run(susy::cli::RunConfig::from_json(nlohmann::json::parse(config))).text;
}

std::string energy_levels_json(const std::string& kind, const std::string& params, int n_max) {
    const auto k = susy::kind_from_name(kind);
    if (!k) throw susy::config_error("unknown kind '" + kind + "'");
    return susy::energy_levels(*k, susy::params_from_json(nlohmann::json::parse(params)), n_max).to_json().dump();
}

std::string pdm_spectrum_json(const std::string& row, double alpha, double nu, int l, int n_max, bool numeric) {
    return susy::pdm_spectrum(susy::pdm_row(row), {alpha, nu, l}, n_max, {}, numeric).to_json().dump();
}

} // namespace

PYBIND11_MODULE(_susyspec, m) {
    m.doc() = "Shape-invariant supersymmetric quantum mechanics";

    static py::exception<susy::Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const susy::Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("_run", &run_json, py::arg("config"));
    m.def("_catalog", [] { return susy::catalog_json().dump(); });
    m.def("_energy_levels", &energy_levels_json, py::arg("kind"), py::arg("params"), py::arg("n_max"));
    m.def("_pdm_spectrum", &pdm_spectrum_json, py::arg("row"), py::arg("alpha"), py::arg("nu"), py::arg("l"),
          py::arg("n_max"), py::arg("numeric"));
    m.def("_config_schema", [] { return susy::cli::config_schema().dump(); });
    m.def("item10_energy", &susy::item10_energy, py::arg("alpha"), py::arg("nu"), py::arg("l"), py::arg("n"));
    m.def("factorization_constant",
          [](const std::string& kind, const std::string& params) {
              const auto k = susy::kind_from_name(kind);
              if (!k) throw susy::config_error("unknown kind '" + kind + "'");
              return susy::factorization_constant(*k, susy::params_from_json(nlohmann::json::parse(params)));
          },
          py::arg("kind"), py::arg("params"));
}
