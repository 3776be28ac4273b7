#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jcm/asymptotics.hpp"
#include "jcm/quasiprobability.hpp"
#include "jcm/runner.hpp"
#include "jcm/specfun.hpp"
#include "jcm/verify.hpp"

namespace py = pybind11;

namespace {

jcm::SystemConfig make_system(std::vector<jcm::ModeConfig> modes, double detuning_ratio) {
  jcm::SystemConfig config{std::move(modes), detuning_ratio};
  config.validate();
  return config;
}

py::dict series_to_dict(const jcm::ObservableSeries& series) {
  py::dict out;
  out["T"] = series.t;
  for (std::size_t c = 0; c < series.names.size(); ++c) {
    out[py::str(series.names[c])] = series.columns[c];
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multimode multiphoton Jaynes-Cummings model: Wigner function at the origin";

  auto base = py::register_exception<jcm::Error>(m, "JcmError", PyExc_RuntimeError);
  py::register_exception<jcm::ConfigError>(m, "ConfigError", base.ptr());

  // specfun
  m.def("hermite_at_zero", &jcm::specfun::hermite_at_zero, py::arg("n"));
  m.def("laguerre", &jcm::specfun::laguerre, py::arg("n"), py::arg("x"));
  m.def("bessel_i", &jcm::specfun::bessel_i, py::arg("order"), py::arg("z"));
  m.def("log_rising_factorial", &jcm::specfun::log_rising_factorial, py::arg("n"), py::arg("k"));

  // fock
  py::enum_<jcm::Parity>(m, "Parity").value("EVEN", jcm::Parity::kEven).value("ODD", jcm::Parity::kOdd);
  py::class_<jcm::FieldAmplitudes>(m, "FieldAmplitudes")
      .def_static("from_coefficients", &jcm::FieldAmplitudes::from_coefficients, py::arg("coeffs"),
                  py::arg("tail_bound") = 0.0)
      .def_property_readonly("coeffs", [](const jcm::FieldAmplitudes& s) {
        return std::vector<jcm::Complex>(s.coeffs().begin(), s.coeffs().end());
      })
      .def_property_readonly("n_max", &jcm::FieldAmplitudes::n_max)
      .def_property_readonly("tail_bound", &jcm::FieldAmplitudes::tail_bound)
      .def("norm_sq", &jcm::FieldAmplitudes::norm_sq)
      .def("mean_photon_number", &jcm::FieldAmplitudes::mean_photon_number);
  m.def("coherent", &jcm::coherent, py::arg("alpha"), py::arg("n_max"),
        py::arg("tail_tolerance") = jcm::kDefaultTailTolerance);
  m.def("cat", &jcm::cat, py::arg("alpha"), py::arg("parity"), py::arg("n_max"),
        py::arg("tail_tolerance") = jcm::kDefaultTailTolerance);
  m.def("number", &jcm::number, py::arg("m"), py::arg("n_max"));

  py::class_<jcm::ModeConfig>(m, "ModeConfig")
      .def(py::init([](int k, jcm::FieldAmplitudes state, std::optional<double> omega) {
             jcm::ModeConfig mode{k, std::move(state), omega};
             mode.validate();
             return mode;
           }),
           py::arg("k"), py::arg("state"), py::arg("omega") = std::nullopt)
      .def_readonly("k", &jcm::ModeConfig::k)
      .def_readonly("state", &jcm::ModeConfig::state);

  // dynamics
  py::class_<jcm::SystemConfig>(m, "SystemConfig")
      .def(py::init(&make_system), py::arg("modes"), py::arg("detuning_ratio") = 0.0)
      .def_readonly("modes", &jcm::SystemConfig::modes)
      .def_readonly("detuning_ratio", &jcm::SystemConfig::detuning_ratio);
  py::class_<jcm::EvolvedState>(m, "EvolvedState")
      .def_readonly("T", &jcm::EvolvedState::T)
      .def_readonly("k", &jcm::EvolvedState::k)
      .def_readonly("a_plus", &jcm::EvolvedState::a_plus)
      .def_readonly("a_minus", &jcm::EvolvedState::a_minus)
      .def_property_readonly("extents", [](const jcm::EvolvedState& s) {
        return std::vector<int>(s.grid.extents().begin(), s.grid.extents().end());
      })
      .def("norm_sq", &jcm::EvolvedState::norm_sq);
  m.def("g1_g2", [](const std::vector<int>& n, double T, const jcm::SystemConfig& config) {
    const jcm::BranchFactors g = jcm::g1_g2(n, T, config);
    return py::make_tuple(g.g1, g.g2);
  }, py::arg("n"), py::arg("T"), py::arg("config"));
  m.def("evolve", &jcm::evolve, py::arg("config"), py::arg("T"));
  m.def("atomic_inversion", py::overload_cast<const jcm::SystemConfig&, double>(&jcm::atomic_inversion),
        py::arg("config"), py::arg("T"));
  m.def("photon_count_distribution",
        py::overload_cast<const jcm::SystemConfig&, double>(&jcm::photon_count_distribution),
        py::arg("config"), py::arg("T"));

  // quasiprobability
  m.def("wigner_number_state", &jcm::wigner_number_state, py::arg("n"), py::arg("q"), py::arg("p"));
  m.def("marginal_number_state", &jcm::marginal_number_state, py::arg("n"), py::arg("q"));
  m.def("wigner_origin", py::overload_cast<const jcm::SystemConfig&, double>(&jcm::wigner_origin),
        py::arg("config"), py::arg("T"));
  m.def("wigner_origin_initial_product", &jcm::wigner_origin_initial_product, py::arg("config"));
  m.def("homodyne_origin", py::overload_cast<const jcm::SystemConfig&, double>(&jcm::homodyne_origin),
        py::arg("config"), py::arg("T"));
  m.def("q_origin", py::overload_cast<const jcm::SystemConfig&, double>(&jcm::q_origin),
        py::arg("config"), py::arg("T"));
  m.def("parity_sum", &jcm::parity_sum, py::arg("count_dist"));
  m.def("position_distribution", &jcm::position_distribution, py::arg("config"), py::arg("T"),
        py::arg("zeta"));
  m.def("phase_averaged_position_distribution", &jcm::phase_averaged_position_distribution,
        py::arg("config"), py::arg("T"), py::arg("zeta"));
  // The callable is invoked a few thousand times from C++.
  m.def("inverse_radon_origin", [](const std::function<double(double)>& pr) {
    return jcm::inverse_radon_origin(pr);
  }, py::arg("pr"));

  // asymptotics
  py::class_<jcm::AsymptoticParams>(m, "AsymptoticParams")
      .def_static("from_n_bar", &jcm::AsymptoticParams::from_n_bar, py::arg("n_bar"))
      .def_readonly("n_bar", &jcm::AsymptoticParams::n_bar)
      .def_readonly("alpha_sq", &jcm::AsymptoticParams::alpha_sq);
  m.def("sqrt_harmonic", &jcm::sqrt_harmonic, py::arg("n"), py::arg("params"));
  m.def("wigner_origin_asymptotic", &jcm::wigner_origin_asymptotic, py::arg("params"), py::arg("T"));
  m.def("homodyne_asymptotic", &jcm::homodyne_asymptotic, py::arg("params"), py::arg("T"));
  m.def("p_extrema", [](const jcm::AsymptoticParams& params) {
    const jcm::PExtrema e = jcm::p_extrema(params);
    return py::make_tuple(e.p_zero, e.p_max);
  }, py::arg("params"));
  py::enum_<jcm::HermitePoissonVariant>(m, "HermitePoissonVariant")
      .value("I0", jcm::HermitePoissonVariant::kI0)
      .value("I1", jcm::HermitePoissonVariant::kI1)
      .value("PHASED", jcm::HermitePoissonVariant::kPhased);
  m.def("hermite_poisson_sum", &jcm::hermite_poisson_sum, py::arg("variant"), py::arg("alpha_sq"),
        py::arg("phase") = 0.0);

  // runner
  m.def("run_config_text", [](const std::string& text, int threads) {
    std::istringstream in(text);
    const jcm::RunConfig config = jcm::parse_run_config(in, "<string>");
    jcm::ObservableSeries series;
    {
      py::gil_scoped_release release;
      series = jcm::run(config, threads);
    }
    return series_to_dict(series);
  }, py::arg("text"), py::arg("threads") = 1,
        "Parse a config from text, evaluate it and return {column: values}.");
  m.def("verify", [](const std::string& suite) {
    const jcm::SuiteReport report = jcm::run_suite(suite);
    py::list checks;
    for (const jcm::CheckResult& c : report.checks) {
      checks.append(py::dict(py::arg("name") = c.name, py::arg("max_deviation") = c.max_deviation,
                             py::arg("tolerance") = c.tolerance, py::arg("passed") = c.passed,
                             py::arg("error") = c.error));
    }
    return py::make_tuple(report.passed(), checks);
  }, py::arg("suite"));
}
