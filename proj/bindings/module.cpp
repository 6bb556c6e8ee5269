#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "guposc/cli.hpp"
#include "guposc/entropy.hpp"
#include "guposc/oscillator.hpp"
#include "guposc/specfun.hpp"
#include "guposc/transform.hpp"

namespace py = pybind11;
using namespace guposc;

namespace {

// the strong types stay a C++ detail; python callers pass plain numbers
specfun::PolyOrder order(int n) { return specfun::PolyOrder(n); }
specfun::GegenbauerIndex gindex(double lam) { return specfun::GegenbauerIndex(lam); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimal-length (GUP) harmonic oscillator: eigenstates, Fourier synthesis, "
              "Shannon entropies, BBM/GUP uncertainty checks";

    py::register_exception<specfun::PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<quadrature::QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    auto sf = m.def_submodule("specfun", "special-function kernel");
    sf.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
    sf.def("digamma", &specfun::digamma, py::arg("x"));
    sf.def("harmonic", &specfun::harmonic, py::arg("x"));
    sf.def(
        "gegenbauer",
        [](int n, double lam, double s) { return specfun::gegenbauer(order(n), gindex(lam), s); },
        py::arg("n"), py::arg("lam"), py::arg("s"));
    sf.def(
        "gegenbauer_norm", [](int n, double nu) { return specfun::gegenbauer_norm(order(n), nu); },
        py::arg("n"), py::arg("nu"));
    sf.def(
        "rel_hermite",
        [](int n, double lam, double z) { return specfun::rel_hermite(order(n), gindex(lam), z); },
        py::arg("n"), py::arg("lam"), py::arg("z"));
    sf.def(
        "hermite", [](int n, double z) { return specfun::hermite(order(n), z); }, py::arg("n"),
        py::arg("z"));
    sf.def("hyp2f1_unit", &specfun::hyp2f1_unit, py::arg("a"), py::arg("b"), py::arg("c"));

    py::class_<GupParams>(m, "GupParams")
        .def(py::init<double, double, double, double>(), py::arg("m") = 1.0,
             py::arg("omega") = 1.0, py::arg("hbar") = 1.0, py::arg("beta") = 1.0)
        .def_readonly("m", &GupParams::m)
        .def_readonly("omega", &GupParams::omega)
        .def_readonly("hbar", &GupParams::hbar)
        .def_readonly("beta", &GupParams::beta)
        .def_property_readonly("eta", &GupParams::eta)
        .def_property_readonly("band_halfwidth", &GupParams::band_halfwidth)
        .def("__repr__", [](const GupParams& p) {
            return "GupParams(m=" + std::to_string(p.m) + ", omega=" + std::to_string(p.omega) +
                   ", hbar=" + std::to_string(p.hbar) + ", beta=" + std::to_string(p.beta) + ")";
        });

    m.def("lambda_param", &lambda_param, py::arg("params"));
    m.def("energy", &energy, py::arg("params"), py::arg("n"));
    m.def("norm_const", &norm_const, py::arg("params"), py::arg("n"));
    m.def("ordinary_energy", &ordinary_energy, py::arg("params"), py::arg("n"));
    m.def("ordinary_phi", &ordinary_phi, py::arg("params"), py::arg("n"), py::arg("p"));
    m.def("ordinary_psi", &ordinary_psi, py::arg("params"), py::arg("n"), py::arg("x"));

    py::class_<EigenState>(m, "EigenState")
        .def(py::init<const GupParams&, int>(), py::arg("params"), py::arg("n"))
        .def_property_readonly("params", &EigenState::params)
        .def_property_readonly("n", &EigenState::n)
        .def_property_readonly("lam", &EigenState::lambda)
        .def_property_readonly("energy", &EigenState::energy)
        .def_property_readonly("norm_const", &EigenState::norm_const)
        .def_property_readonly("band_halfwidth", &EigenState::band_halfwidth)
        .def_property_readonly("support_radius", &EigenState::support_radius)
        .def("phi", &EigenState::phi, py::arg("p"))
        .def("phi_relhermite",
             [](const EigenState& s, double p) { return phi_eval_relhermite(s, p); },
             py::arg("p"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"), py::arg("count"))
        .def_readonly("x_min", &GridSpec::x_min)
        .def_readonly("x_max", &GridSpec::x_max)
        .def_readonly("count", &GridSpec::count);

    py::enum_<WaveMethod>(m, "WaveMethod")
        .value("numeric_synthesis", WaveMethod::numeric_synthesis)
        .value("closed_form", WaveMethod::closed_form);

    py::class_<PositionWave>(m, "PositionWave")
        .def(py::init<const EigenState&, WaveMethod>(), py::arg("state"),
             py::arg("method") = WaveMethod::numeric_synthesis)
        .def("__call__", &PositionWave::operator(), py::arg("x"))
        .def("density", &PositionWave::density, py::arg("x"))
        .def_property_readonly("method", &PositionWave::method);

    m.def("psi_numeric", &psi_numeric, py::arg("state"), py::arg("x"),
          py::call_guard<py::gil_scoped_release>());
    m.def("psi0_closed", &psi0_closed, py::arg("params"), py::arg("x"));
    m.def("psi1_closed", &psi1_closed, py::arg("params"), py::arg("x"));

    py::class_<WaveSample>(m, "WaveSample")
        .def_readonly("x", &WaveSample::x)
        .def_readonly("psi", &WaveSample::psi)
        .def_readonly("density", &WaveSample::density);
    m.def("sample_wave",
          py::overload_cast<const PositionWave&, const GridSpec&>(&sample_wave), py::arg("wave"),
          py::arg("grid"), py::call_guard<py::gil_scoped_release>());

    py::class_<quadrature::QuadResult>(m, "QuadResult")
        .def_readonly("value", &quadrature::QuadResult::value)
        .def_readonly("err_estimate", &quadrature::QuadResult::err_estimate)
        .def_readonly("evaluations", &quadrature::QuadResult::evaluations);

    py::class_<DensitySample>(m, "DensitySample")
        .def_readonly("coord", &DensitySample::coord)
        .def_readonly("density", &DensitySample::density)
        .def_readonly("entropy_density", &DensitySample::entropy_density);
    py::class_<DensityProfiles>(m, "DensityProfiles")
        .def_readonly("position", &DensityProfiles::position)
        .def_readonly("momentum", &DensityProfiles::momentum);

    py::class_<Dispersions>(m, "Dispersions")
        .def_readonly("delta_X", &Dispersions::delta_X)
        .def_readonly("delta_P", &Dispersions::delta_P);

    py::class_<EntropyReport>(m, "EntropyReport")
        .def_readonly("params", &EntropyReport::params)
        .def_readonly("n", &EntropyReport::n)
        .def_readonly("S_x", &EntropyReport::S_x)
        .def_readonly("S_p", &EntropyReport::S_p)
        .def_readonly("sum", &EntropyReport::sum)
        .def_readonly("bbm_bound", &EntropyReport::bbm_bound)
        .def_readonly("bbm_holds", &EntropyReport::bbm_holds)
        .def_readonly("delta_X", &EntropyReport::delta_X)
        .def_readonly("delta_P", &EntropyReport::delta_P)
        .def_readonly("gup_lhs", &EntropyReport::gup_lhs)
        .def_readonly("gup_rhs", &EntropyReport::gup_rhs)
        .def_readonly("gup_holds", &EntropyReport::gup_holds)
        .def_readonly("err_Sx", &EntropyReport::err_Sx)
        .def_readonly("err_Sp", &EntropyReport::err_Sp)
        .def_readonly("sp_numeric_only", &EntropyReport::sp_numeric_only);

    m.def("sp_numeric", &sp_numeric, py::arg("state"), py::arg("tol") = 1e-10,
          py::call_guard<py::gil_scoped_release>());
    m.def("sp_analytic", &sp_analytic, py::arg("params"), py::arg("n"));
    m.def("sx_numeric", &sx_numeric, py::arg("wave"), py::arg("tol") = 1e-8,
          py::call_guard<py::gil_scoped_release>());
    m.def("density_profiles", &density_profiles, py::arg("state"), py::arg("wave"),
          py::arg("grid"), py::call_guard<py::gil_scoped_release>());
    m.def("dispersions", &dispersions, py::arg("state"), py::arg("wave"), py::arg("tol") = 1e-7,
          py::call_guard<py::gil_scoped_release>());
    m.def("bbm_report", &bbm_report, py::arg("params"), py::arg("n"), py::arg("tol") = 1e-8,
          py::call_guard<py::gil_scoped_release>());
    m.def("ordinary_report", &ordinary_report, py::arg("params"), py::arg("n"),
          py::arg("tol") = 1e-8, py::call_guard<py::gil_scoped_release>());
}
