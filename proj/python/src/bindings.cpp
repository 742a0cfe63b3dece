#include "cevian/error.hpp"
#include "cevian/locus.hpp"
#include "cevian/serialize.hpp"
#include "cevian/svg.hpp"
#include "cevian/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cevian;

namespace {

py::dict configuration_dict(const Configuration &c) {
    py::dict d;
    d["P"] = c.P;
    d["P'"] = c.P_prime;
    d["Q"] = c.Q;
    d["Q'"] = c.Q_prime;
    d["H"] = c.H;
    d["O"] = c.O;
    d["O'"] = c.O_prime;
    d["S"] = c.S;
    d["D"] = c.traces.D;
    d["E"] = c.traces.E;
    d["F"] = c.traces.F;
    if (c.V) d["V"] = *c.V;
    if (c.Z) d["Z"] = *c.Z;
    if (c.U) d["U"] = *c.U;
    return d;
}

py::tuple wpoint_tuple(const WPoint &p) {
    if (p.is_infinity()) return py::tuple();
    return py::make_tuple(p.u(), p.v());
}

WPoint wpoint_from(const py::object &o) {
    if (o.is_none()) return WPoint::infinity();
    const auto t = o.cast<py::sequence>();
    if (t.size() == 0) return WPoint::infinity();
    if (t.size() != 2) throw Error(ErrorKind::ParseError, "expected (u, v) or None");
    return {t[0].cast<FieldElement>(), t[1].cast<FieldElement>()};
}

} // namespace

PYBIND11_MODULE(_cevian, m) {
    m.doc() = "Exact barycentric geometry of generalized orthocenters";

    static py::exception<Error> error(m, "CevianError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<FieldElement>(m, "FieldElement")
        .def(py::init([](const std::string &text) { return parse_field(text); }), py::arg("text"))
        .def(py::init<long>())
        .def(py::init([](const FieldElement &a) { return a; }))
        .def("sign", &FieldElement::sign)
        .def("is_rational", &FieldElement::is_rational)
        .def("inverse", &FieldElement::inverse)
        .def("__float__", &FieldElement::to_double)
        .def("__str__", &FieldElement::to_string)
        .def("__repr__", [](const FieldElement &a) { return "FieldElement('" + a.to_string() + "')"; })
        .def("__hash__", [](const FieldElement &a) { return py::hash(py::str(a.to_string())); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self + long())
        .def(py::self * long())
        .def(long() * py::self)
        .def("__eq__", [](const FieldElement &a, long b) { return a == FieldElement(b); })
        .def_static("sqrt", [](std::int64_t n) { return FieldElement::root_of(n); });
    py::implicitly_convertible<long, FieldElement>();
    py::implicitly_convertible<std::string, FieldElement>();

    py::class_<BaryPoint>(m, "Point")
        .def(py::init([](const std::string &text) { return parse_point(text); }), py::arg("text"))
        .def(py::init<FieldElement, FieldElement, FieldElement>())
        .def_property_readonly("coords",
                               [](const BaryPoint &p) { return std::vector<FieldElement>{p[0], p[1], p[2]}; })
        .def("normalized",
             [](const BaryPoint &p) {
                 const Triple t = p.normalized();
                 return std::vector<FieldElement>{t[0], t[1], t[2]};
             })
        .def("is_infinite", &BaryPoint::is_infinite)
        .def("__str__", &BaryPoint::to_string)
        .def("__repr__", [](const BaryPoint &p) { return "Point('" + p.to_string() + "')"; })
        .def("__hash__", [](const BaryPoint &p) { return py::hash(py::str(p.to_string())); })
        .def(py::self == py::self);

    py::class_<BaryLine>(m, "Line")
        .def(py::init([](const std::string &text) { return parse_line(text); }), py::arg("text"))
        .def("contains", &BaryLine::contains)
        .def("__str__", &BaryLine::to_string)
        .def("__repr__", [](const BaryLine &l) { return "Line('" + l.to_string() + "')"; })
        .def(py::self == py::self);

    m.attr("A") = ref::A();
    m.attr("B") = ref::B();
    m.attr("C") = ref::C();
    m.attr("G") = ref::G();

    m.def("join", &join);
    m.def("meet", &meet);
    m.def("complement", &complement);
    m.def("anticomplement", &anticomplement);
    m.def("isotomic", &isotomic);
    m.def("isotom_complement", &isotom_complement);
    m.def("is_valid", &is_valid, py::arg("p"), py::arg("off_medians") = false);

    m.def("derive", [](const BaryPoint &p) { return configuration_dict(derive_configuration(p)); },
          "Derived points of P keyed by name (P', Q, Q', H, O, O', S, D, E, F; V, Z, U off the medians).");
    m.def(
        "classify_M",
        [](const BaryPoint &p) {
            const MClassification c = classify_M(p);
            py::dict d;
            d["kind"] = std::string(to_string(c.kind));
            d["k"] = c.k ? py::cast(*c.k) : py::none();
            d["S"] = c.S;
            return d;
        },
        "Kind of M = T_P K^-1 T_P' with its ratio and center.");
    m.def("s_formula", &s_formula);
    m.def("vertex_orthocenter", [](const BaryPoint &p) -> py::object {
        const auto v = vertex_orthocenter_check(p);
        if (!v) return py::none();
        return py::str(std::string(to_string(*v)));
    });
    m.def("compute_json", [](const BaryPoint &p) {
        const Configuration c = derive_configuration(p);
        Json out;
        for (const auto &[k, v] : configuration_dict(c)) out[k.cast<std::string>()] = to_json(v.cast<BaryPoint>());
        return out.dump();
    });

    m.def("es_contains", &es_contains);
    m.def("j_invariant", [] { return j_invariant().get_str(); });
    m.def("p_tilde", [] { return wpoint_tuple(p_tilde()); });
    m.def("w_add", [](const py::object &p, const py::object &q) { return wpoint_tuple(w_add(wpoint_from(p), wpoint_from(q))); });
    m.def("w_multiple",
          [](std::int64_t n, const py::object &p) { return wpoint_tuple(w_multiple(n, wpoint_from(p))); });
    m.def("w_order", [](const py::object &p, int max_order) { return w_order(wpoint_from(p), max_order); },
          py::arg("p"), py::arg("max_order") = 12);
    m.def("torsion12", [] {
        py::list out;
        for (const auto &p : torsion12()) out.append(wpoint_tuple(p));
        return out;
    });
    m.def("bary_to_w", [](const BaryPoint &p) { return wpoint_tuple(bary_to_w(p)); });
    m.def("w_to_bary", [](const py::object &p) { return w_to_bary(wpoint_from(p)); });
    m.def("es_sample", &es_sample, py::arg("n"), py::arg("seed") = 1);

    m.def("suite_names", [] {
        std::vector<std::string> out;
        for (const auto s : suite_names()) out.emplace_back(s);
        return out;
    });
    m.def(
        "run_suite",
        [](const std::string &name, std::uint32_t seed, std::size_t n) {
            py::list out;
            for (const auto &c : run_suite(name, seed, n).checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
            return out;
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("n") = 20, "List of (check, passed, detail).");

    m.def("figure_names", [] {
        std::vector<std::string> out;
        for (const auto f : figure_names()) out.emplace_back(f);
        return out;
    });
    m.def(
        "render",
        [](const std::string &figure, const std::optional<std::string> &placement, const std::optional<BaryPoint> &point) {
            const Placement pl = placement ? parse_placement(*placement) : default_placement();
            return render_figure(figure, pl, point);
        },
        py::arg("figure"), py::arg("placement") = py::none(), py::arg("point") = py::none(), "SVG text of a figure.");
}
