#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppwell/errors.h"
#include "ppwell/lapsol.h"
#include "ppwell/oracle.h"
#include "ppwell/scenario_io.h"
#include "ppwell/specfun.h"
#include "ppwell/timedomain.h"

namespace py = pybind11;
using namespace ppwell;

namespace {

DimensionlessScenario make_scenario(double r_D, double r_wD, double C_wD, double d_D, double l_D,
                                    double K_D, std::optional<double> z_D,
                                    std::optional<std::pair<double, double>> interval)
{
    if (z_D && interval) {
        throw ValidationError("give either z_D or interval, not both");
    }
    DimensionlessScenario sc;
    sc.r_D = r_D;
    sc.r_wD = r_wD;
    sc.C_wD = C_wD;
    sc.d_D = d_D;
    sc.l_D = l_D;
    sc.K_D = K_D;
    if (interval) {
        sc.observation = DepthInterval{interval->first, interval->second};
    } else {
        sc.observation = PointDepth{z_D.value_or(0.5)};
    }
    sc.validate();
    return sc;
}

timedomain::SolverConfig solver(int terms_m, double tolerance, unsigned threads)
{
    timedomain::SolverConfig cfg;
    cfg.inversion.terms_m = terms_m;
    cfg.inversion.tolerance = tolerance;
    cfg.threads = threads;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Drawdown around a partially penetrating well with wellbore storage";
    m.attr("__version__") = PPWELL_VERSION;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<DimensionlessScenario>(m, "Scenario")
        .def(py::init(&make_scenario), py::kw_only(), py::arg("r_D"), py::arg("r_wD"),
             py::arg("C_wD"), py::arg("d_D"), py::arg("l_D"), py::arg("K_D") = 1.0,
             py::arg("z_D") = py::none(), py::arg("interval") = py::none())
        .def_readonly("r_D", &DimensionlessScenario::r_D)
        .def_readonly("r_wD", &DimensionlessScenario::r_wD)
        .def_readonly("C_wD", &DimensionlessScenario::C_wD)
        .def_readonly("d_D", &DimensionlessScenario::d_D)
        .def_readonly("l_D", &DimensionlessScenario::l_D)
        .def_readonly("K_D", &DimensionlessScenario::K_D)
        .def_property_readonly("beta", &DimensionlessScenario::beta)
        .def_property_readonly("observation",
                               [](const DimensionlessScenario& sc) -> py::object {
                                   if (const auto* p = std::get_if<PointDepth>(&sc.observation)) {
                                       return py::float_(p->z);
                                   }
                                   const auto& iv = std::get<DepthInterval>(sc.observation);
                                   return py::make_tuple(iv.z1, iv.z2);
                               })
        .def("canonical", [](const DimensionlessScenario& sc) { return canonical_form(sc); })
        .def("__repr__",
             [](const DimensionlessScenario& sc) { return "Scenario(" + canonical_form(sc) + ")"; });

    m.def("bessel_k0", &specfun::bessel_k0, py::arg("z"));
    m.def("bessel_k1", &specfun::bessel_k1, py::arg("z"));
    m.def("exp_integral_e1", &specfun::exp_integral_e1, py::arg("u"));

    m.def(
        "laplace",
        [](std::complex<double> p, const DimensionlessScenario& sc, const std::string& variant) {
            return timedomain::transform(sc, timedomain::parse_variant(variant), {})(p);
        },
        py::arg("p"), py::arg("scenario"), py::arg("variant") = "unified",
        "Laplace-space drawdown as a function of p (conjugate to t_s).");

    m.def(
        "drawdown",
        [](double t_s, const DimensionlessScenario& sc, const std::string& variant, int terms_m,
           double tolerance) {
            return timedomain::drawdown(t_s, sc, timedomain::parse_variant(variant),
                                        solver(terms_m, tolerance, 1));
        },
        py::arg("t_s"), py::arg("scenario"), py::arg("variant") = "unified",
        py::arg("terms_m") = 20, py::arg("tolerance") = 1e-9,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "curve",
        [](const DimensionlessScenario& sc, const std::string& variant, double t_min,
           double t_max, int per_decade, unsigned threads) {
            const auto c = timedomain::curve(sc, timedomain::parse_variant(variant), t_min, t_max,
                                             per_decade, solver(20, 1e-9, threads));
            std::vector<double> t, s;
            for (const auto& pt : c.points) {
                t.push_back(pt.t_s);
                s.push_back(pt.s_D);
            }
            return std::make_pair(t, s);
        },
        py::arg("scenario"), py::arg("variant") = "unified", py::arg("t_min") = 1e-6,
        py::arg("t_max") = 1e6, py::arg("per_decade") = 20, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "Returns (t_s, s_D) lists on a log grid.");

    m.def(
        "invert",
        [](const std::function<std::complex<double>(std::complex<double>)>& f, double t,
           int terms_m, double tolerance) {
            laplace_inv::InversionConfig cfg;
            cfg.terms_m = terms_m;
            cfg.tolerance = tolerance;
            return laplace_inv::invert_at(f, t, cfg).value;
        },
        py::arg("transform"), py::arg("t"), py::arg("terms_m") = 20, py::arg("tolerance") = 1e-9,
        "Inverts a Python callable F(p) at time t.");

    m.def(
        "check",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : oracle::run_suite(suite)) {
                py::dict d;
                d["check"] = r.check;
                d["scenario"] = r.scenario;
                d["max_rel_error"] = r.max_rel_error;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                d["worst_location"] = r.worst_location;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), "Runs a verification suite; returns one dict per check.");
}
