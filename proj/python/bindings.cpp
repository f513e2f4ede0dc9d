#include "fglwb/cli.hpp"
#include "fglwb/expr.hpp"
#include "fglwb/genera.hpp"
#include "fglwb/suw.hpp"
#include "fglwb/verify.hpp"
#include "fglwb/workbench.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fglwb;

namespace {

py::object to_fraction(const Rat& r) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    py::object Int = py::module_::import("builtins").attr("int");
    return Fraction(Int(r.get_num().get_str()), Int(r.get_den().get_str()));
}

py::dict coefficient_dict(const PolySeries2& s, int bound, bool upper_only) {
    py::dict d;
    for (int i = 0; i <= bound; ++i)
        for (int j = upper_only ? i : 0; i + j <= bound; ++j)
            if (!s(i, j).is_zero()) d[py::make_tuple(i, j)] = s(i, j);
    return d;
}

py::dict map_dict(const ClassifyingMap& m) {
    py::dict d;
    for (int n = 1; n <= m.N; ++n) d[py::int_(n)] = m.images.at(Generator::cp(n));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Formal group laws, genera and SU-bordism computations over exact rationals";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CacheError>(m, "CacheError", PyExc_OSError);

    py::class_<GradedPoly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_class(text); }), py::arg("text"))
        .def_property_readonly("weight", [](const GradedPoly& p) -> py::object {
            auto w = p.weight();
            return w ? py::int_(*w) : py::object(py::none());
        })
        .def("is_zero", &GradedPoly::is_zero)
        .def("canonical", &GradedPoly::canonical)
        .def("coefficient", [](const GradedPoly& p, const std::string& monomial) {
            GradedPoly mono = parse_class(monomial);
            if (mono.terms().size() != 1 || mono.terms().begin()->second != 1)
                throw DomainError("expected a single monomial");
            return to_fraction(p.coeff_of(mono.terms().begin()->first));
        })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", &GradedPoly::pow)
        .def("__str__", &GradedPoly::pretty)
        .def("__repr__", [](const GradedPoly& p) { return "Poly('" + p.pretty() + "')"; });

    m.def("parse_class", &parse_class, py::arg("text"));
    m.def("alpha", [](int N) { return coefficient_dict(universal_fgl(N).alpha, N + 1, true); }, py::arg("N"),
          "Nonzero alpha(i, j), i <= j, i + j <= N + 1.");
    m.def(
        "pairing",
        [](int N) {
            FGLTable F = universal_fgl(N);
            return coefficient_dict(pairing_series(F).A, N + 2, true);
        },
        py::arg("N"));
    m.def(
        "chern_number",
        [](const GradedPoly& M, std::vector<int> parts) { return to_fraction(chern_number(M, Partition(std::move(parts)))); },
        py::arg("manifold"), py::arg("partition"));
    m.def("s_number", [](const GradedPoly& M) { return to_fraction(s_number_manifold(M)); }, py::arg("manifold"));
    m.def("su_check", [](const GradedPoly& M) { return su_check(M).passed(); }, py::arg("manifold"));
    m.def(
        "genus",
        [](const std::string& which, int N) {
            if (which == "kh") return map_dict(kh_solve(N).phi);
            if (which == "schreieder") return map_dict(schreieder_genus(N));
            FGLTable F = universal_fgl(N);
            if (which == "buchstaber") return map_dict(buchstaber_map(F, pairing_series(F)));
            if (which == "abelian") return map_dict(abelian_map(F));
            throw DomainError("unknown genus '" + which + "'");
        },
        py::arg("which"), py::arg("N") = 12, "Images of CP_1..CP_N.");
    m.def(
        "verify",
        [](const std::string& suite, int N) {
            auto s = suite_from_name(suite);
            if (!s) throw DomainError("unknown suite '" + suite + "'");
            Workbench wb(N);
            py::list out;
            for (const auto& r : run_verify(*s, wb))
                for (const auto& c : r.checks) out.append(py::make_tuple(r.title, c.name, c.pass, c.detail));
            return out;
        },
        py::arg("suite") = "all", py::arg("N") = 12, "List of (report, check, passed, detail).");
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
