#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fracschro/errors.hpp"
#include "fracschro/harness.hpp"
#include "fracschro/kernel.hpp"
#include "fracschro/scalar.hpp"
#include "fracschro/spectral.hpp"

namespace py = pybind11;
using namespace fracschro;

namespace {

py::object to_python(const Json& value) {
    return py::module_::import("json").attr("loads")(value.dump());
}

std::vector<GaussianTerm> terms_from_tuples(
    const std::vector<std::tuple<Complex, int, double, double>>& tuples) {
    std::vector<GaussianTerm> terms;
    for (const auto& [c, d, center, width] : tuples) {
        terms.push_back({c, d, center, width});
    }
    return terms;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractional Schroedinger dynamics: kernels, weak derivatives and spectral propagation.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<DivergenceError>(m, "DivergenceError", error);
    py::register_exception<SpecError>(m, "SpecError", error);
    py::register_exception<ContractError>(m, "ContractError", error);
    py::register_exception<NumericalError>(m, "NumericalError", error);
    py::register_exception<StabilityError>(m, "StabilityError", error);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", error);
    py::register_exception<IoError>(m, "IoError", error);

    py::class_<FractionalOrder>(m, "FractionalOrder")
        .def(py::init<double>(), py::arg("value"))
        .def_property_readonly("value", &FractionalOrder::value)
        .def("__float__", &FractionalOrder::value)
        .def("__repr__", [](const FractionalOrder& a) {
            return "FractionalOrder(" + py::repr(py::float_(a.value())).cast<std::string>() + ")";
        });
    py::implicitly_convertible<double, FractionalOrder>();

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](double truncation, int panels, int nodes, int order) {
                 QuadratureSpec q{truncation, panels, nodes, order};
                 q.validate();
                 return q;
             }),
             py::arg("truncation") = 1e4, py::arg("panels") = 64, py::arg("nodes_per_panel") = 16,
             py::arg("tail_correction_order") = 1)
        .def_readonly("truncation", &QuadratureSpec::truncation)
        .def_readonly("panels", &QuadratureSpec::panels)
        .def_readonly("nodes_per_panel", &QuadratureSpec::nodes_per_panel)
        .def_readonly("tail_correction_order", &QuadratureSpec::tail_correction_order);

    // Kernel.
    m.def("gamma_kernel", &gamma_kernel, py::arg("beta"), py::arg("t"));
    m.def(
        "convolve_exponential",
        [](double beta, double a, double t, const QuadratureSpec& quad) {
            const auto r = convolve_exponential(beta, a, t, quad);
            return std::make_pair(r.value, r.oracle);
        },
        py::arg("beta"), py::arg("a"), py::arg("t"), py::arg("quad") = QuadratureSpec{},
        "Returns (quadrature value, closed form).");
    m.def("love_identity_residual", &love_identity_residual, py::arg("alpha"), py::arg("a"),
          py::arg("t"), py::arg("quad") = QuadratureSpec{});

    // Test functions and weak derivatives.
    py::class_<TestFunction>(m, "TestFunction")
        .def(py::init<>())
        .def(py::init([](const std::vector<std::tuple<Complex, int, double, double>>& terms) {
                 return TestFunction(terms_from_tuples(terms));
             }),
             py::arg("terms"), "Terms as (coefficient, degree, center, width).")
        .def_static("gaussian", &TestFunction::gaussian, py::arg("center"), py::arg("width"),
                    py::arg("coefficient") = Complex(1.0))
        .def("__call__", &TestFunction::operator(), py::arg("t"))
        .def("derivative", &TestFunction::derivative, py::arg("t"))
        .def("shifted", &TestFunction::shifted, py::arg("s"))
        .def("conjugate", &TestFunction::conjugate)
        .def("scaled", &TestFunction::scaled, py::arg("factor"))
        .def("__add__", [](const TestFunction& a, const TestFunction& b) { return a + b; })
        .def_property_readonly("terms", [](const TestFunction& f) {
            py::list out;
            for (const auto& t : f.terms()) {
                out.append(py::make_tuple(t.coefficient, t.degree, t.center, t.width));
            }
            return out;
        });

    py::class_<ExponentialSignal>(m, "ExponentialSignal")
        .def(py::init([](Complex amplitude, double frequency) {
                 return ExponentialSignal{amplitude, frequency};
             }),
             py::arg("amplitude") = Complex(1.0), py::arg("frequency") = 0.0)
        .def_readonly("amplitude", &ExponentialSignal::amplitude)
        .def_readonly("frequency", &ExponentialSignal::frequency)
        .def("__call__", &ExponentialSignal::operator(), py::arg("t"));

    m.def("complex_power", &complex_power, py::arg("alpha"), py::arg("a"));
    m.def("backward_deriv", &backward_deriv, py::arg("alpha"), py::arg("phi"), py::arg("t"),
          py::arg("quad") = QuadratureSpec{});
    m.def("forward_deriv", &forward_deriv, py::arg("alpha"), py::arg("phi"), py::arg("t"),
          py::arg("quad") = QuadratureSpec{});
    m.def("pairing", &pairing, py::arg("u"), py::arg("phi"));
    m.def("weak_pairing", &weak_pairing, py::arg("alpha"), py::arg("u"), py::arg("phi"),
          py::arg("quad") = QuadratureSpec{});
    m.def("l1_norm", &l1_norm, py::arg("phi"));
    m.def("l1_norm_derivative", &l1_norm_derivative, py::arg("phi"));
    m.def("backward_deriv_l1_norm", &backward_deriv_l1_norm, py::arg("alpha"), py::arg("phi"),
          py::arg("quad") = QuadratureSpec{});
    m.def("duality_bound", &duality_bound, py::arg("alpha"), py::arg("phi"));
    m.def("mittag_leffler", &mittag_leffler, py::arg("alpha"), py::arg("z"));

    // Scalar problem.
    py::class_<ScalarProblem>(m, "ScalarProblem")
        .def(py::init([](FractionalOrder alpha, double a, std::vector<TestFunction> family) {
                 ScalarProblem p{alpha, a, std::move(family)};
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("a"), py::arg("test_family") = default_test_family())
        .def_readonly("alpha", &ScalarProblem::alpha)
        .def_readonly("a", &ScalarProblem::a)
        .def_readonly("test_family", &ScalarProblem::test_family);
    m.def("default_test_family", &default_test_family);
    m.def("scalar_weak_residual", &scalar_weak_residual, py::arg("prob"), py::arg("u"),
          py::arg("quad") = QuadratureSpec{});
    m.def(
        "caputo_compare",
        [](double alpha, double lambda, const std::vector<double>& t_grid) {
            py::list out;
            for (const auto& r : caputo_compare(alpha, lambda, t_grid)) {
                out.append(py::make_tuple(r.t, r.modulus_weyl, r.modulus_caputo));
            }
            return out;
        },
        py::arg("alpha"), py::arg("lam"), py::arg("t_grid"),
        "List of (t, modulus_weyl, modulus_caputo).");

    // Spectral.
    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int n, double L) {
                 GridSpec g{n, L};
                 g.validate();
                 return g;
             }),
             py::arg("n") = 64, py::arg("L") = 2.0 * std::numbers::pi)
        .def_readonly("n", &GridSpec::n)
        .def_readonly("L", &GridSpec::L)
        .def_property_readonly("dx", &GridSpec::dx)
        .def("x", [](const GridSpec& g) {
            Eigen::VectorXd x(g.n);
            for (int j = 0; j < g.n; ++j) {
                x[j] = g.x(j);
            }
            return x;
        })
        .def(py::self == py::self);

    py::class_<WaveFunction>(m, "WaveFunction")
        .def(py::init<const GridSpec&, Eigen::VectorXcd>(), py::arg("grid"), py::arg("values"))
        .def_static("zeros", &WaveFunction::zeros, py::arg("grid"))
        .def_static("gaussian", &WaveFunction::gaussian, py::arg("grid"), py::arg("center"),
                    py::arg("width"))
        .def_static("mode", &WaveFunction::mode, py::arg("grid"), py::arg("k"))
        .def_property_readonly("grid", &WaveFunction::grid)
        .def_property_readonly("values", &WaveFunction::values)
        .def("norm", &WaveFunction::norm)
        .def("inner", &WaveFunction::inner, py::arg("other"))
        .def("__sub__", [](const WaveFunction& a, const WaveFunction& b) { return a - b; });

    py::class_<SpectralOperator> op(m, "SpectralOperator");
    py::enum_<SpectralOperator::Basis>(op, "Basis")
        .value("fourier", SpectralOperator::Basis::fourier)
        .value("eigen", SpectralOperator::Basis::eigen);
    op.def_property_readonly("grid", &SpectralOperator::grid)
        .def_property_readonly("basis", &SpectralOperator::basis)
        .def_property_readonly("symbol", &SpectralOperator::symbol)
        .def_property_readonly("unclamped_min", &SpectralOperator::unclamped_min)
        .def("forward", &SpectralOperator::forward, py::arg("v"))
        .def("inverse", &SpectralOperator::inverse, py::arg("coefficients"))
        .def("apply", &SpectralOperator::apply, py::arg("v"));

    m.def("build_free_laplacian", &build_free_laplacian, py::arg("grid"));
    m.def("build_schrodinger", &build_schrodinger, py::arg("grid"), py::arg("V"));
    m.def("propagate", &propagate, py::arg("op"), py::arg("alpha"), py::arg("t"), py::arg("v"));
    m.def("generator_apply",
          py::overload_cast<const SpectralOperator&, double, const WaveFunction&>(&generator_apply),
          py::arg("op"), py::arg("alpha"), py::arg("v"));
    m.def("band_limit", &band_limit, py::arg("op"), py::arg("v"), py::arg("fraction") = 0.1);
    m.def("spectral_mass", &spectral_mass, py::arg("op"), py::arg("v"));
    m.def("read_potential_csv", &read_potential_csv, py::arg("path"));
    m.def("write_wave_csv",
          py::overload_cast<const std::filesystem::path&, const WaveFunction&>(&write_wave_csv),
          py::arg("path"), py::arg("v"));

    // Harness.
    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("name", &CheckReport::name)
        .def_readonly("residual", &CheckReport::residual)
        .def_readonly("tolerance", &CheckReport::tolerance)
        .def_readonly("passed", &CheckReport::passed)
        .def_property_readonly("metadata",
                               [](const CheckReport& r) { return to_python(r.metadata); })
        .def("__repr__", [](const CheckReport& r) {
            return "<CheckReport " + r.name + (r.passed ? " passed>" : " failed>");
        });
    m.def("suite_groups", &suite_groups);
    m.def(
        "run_suite",
        [](double alpha, int n, std::uint64_t seed, std::vector<std::string> groups,
           std::optional<std::vector<double>> potential) {
            SuiteConfig config;
            config.alpha = alpha;
            config.n = n;
            config.seed = seed;
            config.groups = std::move(groups);
            config.potential = std::move(potential);
            return run_suite(config);
        },
        py::arg("alpha") = 0.5, py::arg("n") = 64, py::arg("seed") = 7,
        py::arg("groups") = std::vector<std::string>{}, py::arg("potential") = py::none());
    m.def("reports_to_json", &reports_to_json, py::arg("reports"));
}
