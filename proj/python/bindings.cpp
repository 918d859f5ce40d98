#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsdisp/asymptotics.hpp"
#include "nsdisp/fluids.hpp"
#include "nsdisp/oracle.hpp"
#include "nsdisp/roots.hpp"
#include "nsdisp/sweep.hpp"
#include "nsdisp/thermo.hpp"
#include "nsdisp/verify.hpp"

namespace py = pybind11;
using namespace nsdisp;

namespace {

// Bind optional<double> as float-or-None without extra machinery.
py::object opt(const std::optional<double>& v) {
    if (v)
        return py::float_(*v);
    return py::none();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dispersion relations for the 1-D compressible Navier-Stokes "
              "equations: exact roots, asymptotic expansions, verification "
              "oracles.";

    py::register_exception<validation_error>(m, "ValidationError",
                                             PyExc_ValueError);
    py::register_exception<numerical_error>(m, "NumericalError",
                                            PyExc_ArithmeticError);

    py::class_<FluidState>(m, "FluidState")
        .def(py::init([](double rho, double T, double mu, double lam, double Cv,
                         double gamma, double c) {
                 FluidState f{rho, T, mu, lam, Cv, gamma, c};
                 validate(f, "FluidState");
                 return f;
             }),
             py::arg("rho"), py::arg("T"), py::arg("mu"), py::arg("lambda_"),
             py::arg("Cv"), py::arg("gamma"), py::arg("c"))
        .def_readonly("rho", &FluidState::rho)
        .def_readonly("T", &FluidState::T)
        .def_readonly("mu", &FluidState::mu)
        .def_readonly("lambda_", &FluidState::lambda)
        .def_readonly("Cv", &FluidState::Cv)
        .def_readonly("gamma", &FluidState::gamma)
        .def_readonly("c", &FluidState::c)
        .def("__repr__", [](const FluidState& f) {
            return "FluidState(rho=" + format_double(f.rho) +
                   ", T=" + format_double(f.T) + ", mu=" + format_double(f.mu) +
                   ", lambda_=" + format_double(f.lambda) +
                   ", Cv=" + format_double(f.Cv) +
                   ", gamma=" + format_double(f.gamma) +
                   ", c=" + format_double(f.c) + ")";
        });

    py::class_<DerivedCoefficients>(m, "DerivedCoefficients")
        .def_readonly("Gamma", &DerivedCoefficients::Gamma)
        .def_readonly("Cp", &DerivedCoefficients::Cp)
        .def_readonly("cT", &DerivedCoefficients::cT)
        .def_readonly("Pr", &DerivedCoefficients::Pr)
        .def_property_readonly(
            "alpha", [](const DerivedCoefficients& d) { return opt(d.alpha); })
        .def_property_readonly(
            "beta", [](const DerivedCoefficients& d) { return opt(d.beta); })
        .def_readonly("epsilon", &DerivedCoefficients::epsilon);

    m.def("derive_coefficients", &derive_coefficients, py::arg("fluid"));
    m.def(
        "validate_identities",
        [](const FluidState& f, const DerivedCoefficients& d) {
            const IdentityReport rep = validate_identities(f, d);
            py::list items;
            for (const auto& item : rep.items)
                items.append(py::make_tuple(item.name, item.absolute,
                                            item.relative, item.flagged));
            return py::make_tuple(rep.all_ok, items);
        },
        py::arg("fluid"), py::arg("coeffs"),
        "Returns (all_ok, [(name, absolute, relative, flagged), ...]).");
    m.def("ideal_gas_state", &ideal_gas_state, py::arg("m"), py::arg("T"),
          py::arg("gamma"), py::arg("rho"), py::arg("mu") = 0.0,
          py::arg("lambda_") = 0.0);
    m.def(
        "mean_free_path",
        [](const FluidState& f, double mass) {
            const auto r = mean_free_path(f, mass);
            return py::make_tuple(r.path, r.kn_per_k, r.ratio);
        },
        py::arg("fluid"), py::arg("m"),
        "Returns (path, mu/(rho c), ratio).");

    py::class_<AcousticScales>(m, "AcousticScales")
        .def_readonly("a1", &AcousticScales::a1)
        .def_readonly("a", &AcousticScales::a)
        .def_readonly("Kn", &AcousticScales::Kn)
        .def_readonly("Kn_th", &AcousticScales::Kn_th);
    m.def("acoustic_scales", &acoustic_scales, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"));

    py::enum_<Regime>(m, "Regime")
        .value("euler", Regime::euler)
        .value("stokes", Regime::stokes)
        .value("nonviscous", Regime::nonviscous)
        .value("general", Regime::general);

    py::class_<RegimeInfo>(m, "RegimeInfo")
        .def_readonly("regime", &RegimeInfo::regime)
        .def_readonly("continuum_ok", &RegimeInfo::continuum_ok)
        .def_readonly("overdamped_acoustic", &RegimeInfo::overdamped_acoustic)
        .def_readonly("overdamped_isothermal",
                      &RegimeInfo::overdamped_isothermal);
    m.def("classify_regime", &classify_regime, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"));

    py::class_<CubicDispersion>(m, "CubicDispersion")
        .def_readonly("b2", &CubicDispersion::b2)
        .def_readonly("b1", &CubicDispersion::b1)
        .def_readonly("b0", &CubicDispersion::b0)
        .def_readonly("k", &CubicDispersion::k)
        .def_readonly("scales", &CubicDispersion::scales)
        .def("__call__", &CubicDispersion::eval, py::arg("x"));
    m.def("build_cubic", &build_cubic, py::arg("fluid"), py::arg("coeffs"),
          py::arg("k"));
    m.def(
        "solve_cubic",
        [](const CubicDispersion& p) {
            const auto roots = solve_cubic(p);
            return std::vector<cdouble>(roots.begin(), roots.end());
        },
        py::arg("cubic"));

    py::enum_<Branch>(m, "Branch")
        .value("minus", Branch::minus)
        .value("zero", Branch::zero)
        .value("plus", Branch::plus);

    py::class_<ModeRoot>(m, "ModeRoot")
        .def_readonly("branch", &ModeRoot::branch)
        .def_readonly("x", &ModeRoot::x)
        .def_readonly("omega", &ModeRoot::omega)
        .def_readonly("phase_speed", &ModeRoot::phase_speed)
        .def_readonly("attenuation_rate", &ModeRoot::attenuation_rate);

    py::class_<RootSet>(m, "RootSet")
        .def_property_readonly(
            "roots",
            [](const RootSet& s) {
                return std::vector<ModeRoot>(s.roots.begin(), s.roots.end());
            })
        .def_readonly("regime", &RootSet::regime)
        .def_property_readonly("vieta_residuals", [](const RootSet& s) {
            return std::vector<double>(s.vieta_residuals.begin(),
                                       s.vieta_residuals.end());
        });

    m.def("mode_roots", &mode_roots, py::arg("fluid"), py::arg("coeffs"),
          py::arg("k"),
          "Solve and label the three dispersion branches at wavenumber k.");
    m.def("stokes_roots", &stokes_roots, py::arg("fluid"), py::arg("coeffs"),
          py::arg("k"));

    py::enum_<AsymRegime>(m, "AsymRegime")
        .value("large_pr", AsymRegime::large_pr)
        .value("small_pr", AsymRegime::small_pr)
        .value("nonviscous", AsymRegime::nonviscous)
        .value("stokes", AsymRegime::stokes);

    py::class_<Expansion>(m, "Expansion")
        .def_readonly("regime", &Expansion::regime)
        .def_readonly("order", &Expansion::order)
        .def_property_readonly(
            "roots",
            [](const Expansion& e) {
                return std::vector<ModeRoot>(e.roots.begin(), e.roots.end());
            })
        .def_readonly("c_k", &Expansion::c_k)
        .def_readonly("cT_k", &Expansion::cT_k)
        .def_property_readonly("inside_window", [](const Expansion& e) {
            return e.validity.inside_window;
        });

    m.def("large_pr_expansion", &large_pr_expansion, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"), py::arg("order") = 1);
    m.def("small_pr_expansion", &small_pr_expansion, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"), py::arg("order") = 1);
    m.def("nonviscous_expansion", &nonviscous_expansion, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"));
    m.def(
        "kirchhoff_attenuation_forms",
        [](const FluidState& f, const DerivedCoefficients& d, double k) {
            const auto forms = kirchhoff_attenuation_forms(f, d, k);
            return std::vector<double>(forms.begin(), forms.end());
        },
        py::arg("fluid"), py::arg("coeffs"), py::arg("k"));
    m.def(
        "stokes_speed",
        [](const FluidState& f, const DerivedCoefficients& d, double k) {
            const auto s = stokes_speed(f, d, k);
            return py::make_tuple(s.c_k, s.quadratic, s.overdamped);
        },
        py::arg("fluid"), py::arg("coeffs"), py::arg("k"),
        "Returns (c_k, quadratic approximation, overdamped).");
    m.def("normalized_speed", &normalized_speed, py::arg("fluid"),
          py::arg("coeffs"), py::arg("k"), py::arg("regime"));

    m.def(
        "mode_matrix_eigenvalues",
        [](const FluidState& f, const DerivedCoefficients& d, double k) {
            const auto mats = build_system_matrices(f, d);
            const auto eig = eigen3(mode_matrix(mats, k));
            std::vector<cdouble> omegas;
            for (const auto& lambda : eig)
                omegas.push_back(cdouble(0.0, 1.0) * lambda);
            return omegas;
        },
        py::arg("fluid"), py::arg("coeffs"), py::arg("k"),
        "Frequencies omega = i eig(-i k A - k^2 B), the independent route.");
    m.def(
        "system_matrices",
        [](const FluidState& f, const DerivedCoefficients& d) {
            const auto mats = build_system_matrices(f, d);
            return py::make_tuple(mats.A, mats.B);
        },
        py::arg("fluid"), py::arg("coeffs"));
    m.def(
        "measure_mode_dispersion",
        [](const FluidState& f, const DerivedCoefficients& d, double k,
           const CVec3& w0, double t_end, int steps) {
            const auto mats = build_system_matrices(f, d);
            const ModeTrace trace = evolve_mode(mats, k, w0, t_end, steps);
            const DispersionFit fit = measure_dispersion(trace);
            return py::make_tuple(fit.omegas, fit.residual, fit.degenerate);
        },
        py::arg("fluid"), py::arg("coeffs"), py::arg("k"), py::arg("w0"),
        py::arg("t_end"), py::arg("steps"),
        "Time-domain oracle: returns (fitted omegas, residual, degenerate).");

    py::class_<FluidRecord>(m, "FluidRecord")
        .def_readonly("name", &FluidRecord::name)
        .def_readonly("rho", &FluidRecord::rho)
        .def_readonly("mu", &FluidRecord::mu)
        .def_readonly("c", &FluidRecord::c)
        .def_readonly("lambda_", &FluidRecord::lambda)
        .def_readonly("T", &FluidRecord::T)
        .def_readonly("Cv", &FluidRecord::Cv)
        .def_readonly("gamma", &FluidRecord::gamma)
        .def("to_state", &FluidRecord::to_state);

    m.def("seed_database", &seed_database);
    m.def("load_database", &load_database, py::arg("json_text"),
          py::arg("lenient") = false);
    m.def("run_verification",
          [](std::uint64_t seed) {
              const auto result = run_verification(seed_database(), seed);
              return py::make_tuple(result.report, result.passed,
                                    result.warnings, result.failures);
          },
          py::arg("seed") = 42,
          "Returns (report, passed, warnings, failures).");
}
