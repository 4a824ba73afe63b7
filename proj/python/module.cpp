// Python bindings for the core operations: ring/polynomial construction,
// ideal calculus, determinantal and annihilator ideals, tangent-module
// annihilators, determinacy verdicts, and the property suite.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matsing/session.hpp"
#include "matsing/suite.hpp"

namespace py = pybind11;
using namespace matsing;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

struct PyRing {
    RingPtr ring;
};

struct PyPoly {
    RingPtr ring;
    Polynomial poly;
};

struct PyIdeal {
    RingPtr ring;
    Ideal ideal;
};

struct PyMatrix {
    RingPtr ring;
    PolyMatrix matrix;
};

PyPoly make_poly(const PyRing& r, const std::string& text) {
    return {r.ring, parse_poly(r.ring, text)};
}

PyIdeal make_ideal(const PyRing& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(r.ring, g));
    return {r.ring, Ideal(r.ring, std::move(ps))};
}

PyMatrix make_matrix(const PyRing& r, const std::vector<std::vector<std::string>>& rows,
                     const std::string& space) {
    if (rows.empty()) throw input_error("matrix: no rows");
    std::size_t cols = rows[0].size();
    std::vector<Polynomial> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) throw input_error("matrix: ragged rows");
        for (const auto& e : row) entries.push_back(parse_poly(r.ring, e));
    }
    SpaceTag tag = SpaceTag::Full;
    if (space == "sym") tag = SpaceTag::Symmetric;
    else if (space == "skew") tag = SpaceTag::SkewSymmetric;
    else if (space != "full") throw input_error("space: expected full, sym, or skew");
    return {r.ring, PolyMatrix(r.ring, rows.size(), cols, std::move(entries), tag)};
}

DerivationSet parse_ders(const std::string& d) {
    if (d == "full") return DerivationSet::full();
    if (d == "m") return DerivationSet::in_max();
    if (d == "m2") return DerivationSet::in_max_sq();
    throw input_error("ders: expected full, m, or m2");
}

}  // namespace

PYBIND11_MODULE(_matsing, mod) {
    mod.doc() = "determinacy invariants of matrices over local rings";

    py::register_exception<input_error>(mod, "InputError");
    py::register_exception<budget_exceeded>(mod, "BudgetExceeded");

    py::class_<PyRing>(mod, "Ring")
        .def(py::init([](const std::vector<std::string>& vars, const std::string& field) {
                 return PyRing{Ring::make(vars, Field::parse(field))};
             }),
             py::arg("vars"), py::arg("field") = "QQ")
        .def_property_readonly("vars", [](const PyRing& r) { return r.ring->vars; })
        .def_property_readonly("field", [](const PyRing& r) { return r.ring->field.to_string(); })
        .def("poly", &make_poly, py::arg("text"))
        .def("ideal", &make_ideal, py::arg("gens"))
        .def("maximal_ideal", [](const PyRing& r) { return PyIdeal{r.ring, Ideal::maximal(r.ring)}; })
        .def("matrix", &make_matrix, py::arg("rows"), py::arg("space") = "full");

    py::class_<PyPoly>(mod, "Poly")
        .def("__str__", [](const PyPoly& p) { return poly_to_string(p.poly); })
        .def("__repr__", [](const PyPoly& p) { return "Poly(" + poly_to_string(p.poly) + ")"; })
        .def("__add__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.ring, a.poly + b.poly}; })
        .def("__sub__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.ring, a.poly - b.poly}; })
        .def("__mul__", [](const PyPoly& a, const PyPoly& b) { return PyPoly{a.ring, a.poly * b.poly}; })
        .def("__pow__", [](const PyPoly& a, unsigned k) { return PyPoly{a.ring, pow(a.poly, k)}; })
        .def("__eq__", [](const PyPoly& a, const PyPoly& b) { return a.poly == b.poly; })
        .def("is_zero", [](const PyPoly& p) { return p.poly.is_zero(); })
        .def("degree", [](const PyPoly& p) { return p.poly.degree(); })
        .def("ecart", [](const PyPoly& p) { return p.poly.ecart(); })
        .def("derivative", [](const PyPoly& p, std::size_t var) {
            return PyPoly{p.ring, p.poly.derivative(var)};
        });

    py::class_<PyIdeal>(mod, "Ideal")
        .def("__repr__",
             [](const PyIdeal& I) {
                 std::string s = "Ideal(";
                 bool first = true;
                 for (const auto& g : I.ideal.canonical_strings()) {
                     if (!first) s += ", ";
                     s += g;
                     first = false;
                 }
                 return s + ")";
             })
        .def("gens", [](const PyIdeal& I) {
            std::vector<std::string> out;
            for (const auto& g : I.ideal.gens()) out.push_back(poly_to_string(g));
            return out;
        })
        .def("sbasis", [](const PyIdeal& I) { return I.ideal.canonical_strings(); })
        .def("contains", [](const PyIdeal& I, const PyPoly& f) { return I.ideal.contains(f.poly); })
        .def("__eq__", [](const PyIdeal& a, const PyIdeal& b) { return a.ideal.equals(b.ideal); })
        .def("is_zero", [](const PyIdeal& I) { return I.ideal.is_zero(); })
        .def("is_unit", [](const PyIdeal& I) { return I.ideal.is_unit(); })
        .def("cofinite", [](const PyIdeal& I) { return contains_power_of_max(I.ideal).has_value(); })
        .def("loewy_length", [](const PyIdeal& I) { return loewy_length(I.ideal); })
        .def("dim", [](const PyIdeal& I) { return dim_local(I.ideal); })
        .def("height", [](const PyIdeal& I) { return height(I.ideal); })
        .def("quotient", [](const PyIdeal& I, const PyIdeal& J) {
            return PyIdeal{I.ring, quotient(I.ideal, J.ideal)};
        })
        .def("saturate",
             [](const PyIdeal& I, const PyIdeal& J) {
                 auto r = saturate(I.ideal, J.ideal);
                 return py::make_tuple(PyIdeal{I.ring, r.ideal}, r.iterations);
             })
        .def("intersect", [](const PyIdeal& I, const PyIdeal& J) {
            return PyIdeal{I.ring, intersect(I.ideal, J.ideal)};
        })
        .def("radical_member",
             [](const PyIdeal& I, const PyPoly& f, unsigned power_bound, bool rabinowitsch) {
                 auto r = radical_member(f.poly, I.ideal,
                                         RadicalOptions{power_bound, rabinowitsch});
                 std::string v = r.verdict == Trivalent::Yes ? "yes"
                                 : r.verdict == Trivalent::No ? "no"
                                                              : "unknown";
                 return py::make_tuple(v, r.witness_power);
             },
             py::arg("f"), py::arg("power_bound") = 16, py::arg("rabinowitsch") = false);

    py::class_<PyMatrix>(mod, "Matrix")
        .def("minors", [](const PyMatrix& A, int j) { return PyIdeal{A.ring, minors(A.matrix, j)}; })
        .def("ann_coker", [](const PyMatrix& A) { return PyIdeal{A.ring, ann_coker(A.matrix)}; })
        .def("ann_coker_j",
             [](const PyMatrix& A, int j) { return PyIdeal{A.ring, ann_coker_j(A.matrix, j)}; })
        .def("t1_ann",
             [](const PyMatrix& A, const std::string& group) {
                 return PyIdeal{A.ring, t1_ann(parse_group(group), A.matrix)};
             })
        .def("glr_bounds",
             [](const PyMatrix& A) {
                 auto b = glr_bounds(A.matrix);
                 return py::make_tuple(PyIdeal{A.ring, b.lower}, PyIdeal{A.ring, b.upper});
             })
        .def("verdict", [](const PyMatrix& A, const std::string& group) {
            return json_to_py(report_to_json(verdict(parse_group(group), A.matrix)));
        });

    mod.def("sing",
            [](const PyIdeal& J, int rank, const std::string& ders) {
                return PyIdeal{J.ring, sing(J.ideal, rank, parse_ders(ders))};
            },
            py::arg("ideal"), py::arg("rank"), py::arg("ders") = "full");

    mod.def("briancon_skoda_check",
            [](const PyPoly& f) { return briancon_skoda_check(f.poly); });

    mod.def("run_session", [](const std::string& text) {
        auto r = matsing::run(parse_session_text(text));
        return py::make_tuple(json_to_py(r.report), r.exit_code);
    });

    mod.def("run_suite",
            [](unsigned long long seed, const std::string& field, unsigned cases) {
                SuiteConfig cfg;
                cfg.field = Field::parse(field);
                cfg.seed = seed;
                cfg.cases = cases;
                py::list out;
                for (const auto& r : run_suite(cfg)) {
                    py::dict e;
                    e["name"] = r.name;
                    e["pass"] = r.pass;
                    e["cases"] = r.cases;
                    if (!r.detail.empty()) e["detail"] = r.detail;
                    out.append(e);
                }
                return out;
            },
            py::arg("seed") = 42, py::arg("field") = "GFp:32003", py::arg("cases") = 10);
}
