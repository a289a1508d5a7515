#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hassett/diophantine.hpp"
#include "hassett/families.hpp"
#include "hassett/normal_form.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// hassett::Int <-> Python int, exact in both directions via decimal text.
template <>
struct type_caster<hassett::Int> {
    PYBIND11_TYPE_CASTER(hassett::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = hassett::Int(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const hassett::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using hassett::Int;

py::list gram_rows(const hassett::GramMatrix& g) {
    py::list rows;
    for (const auto& row : g.rows()) {
        py::list r;
        for (const Int& e : row) r.append(py::cast(e));
        rows.append(r);
    }
    return rows;
}

hassett::GramMatrix gram_from_rows(const std::vector<std::vector<Int>>& rows) {
    static const std::vector<std::string> kLabels = {"e1", "e2", "e3"};
    if (rows.empty() || rows.size() > kLabels.size()) {
        throw std::invalid_argument("gram matrix must have 1 to 3 rows");
    }
    return hassett::GramMatrix(rows, {kLabels.begin(), kLabels.begin() + static_cast<long>(rows.size())});
}

hassett::NormalCase parse_case(const std::string& text) {
    for (auto c : {hassett::NormalCase::PlaneI, hassett::NormalCase::PlaneII,
                   hassett::NormalCase::B0, hassett::NormalCase::B1, hassett::NormalCase::B2}) {
        if (text == hassett::to_string(c)) return c;
    }
    throw std::invalid_argument("case must be one of I, II, B0, B1, B2");
}

hassett::FamilyId parse_family(const std::string& text) {
    auto id = hassett::parse_family_id(text);
    if (!id) throw std::invalid_argument("unknown family id: " + text);
    return *id;
}

py::object witness_or_none(const std::optional<hassett::TripleStarWitness>& w) {
    if (!w) return py::none();
    return py::make_tuple(py::cast(w->a), py::cast(w->n));
}

py::object pell_or_none(const std::optional<hassett::PellSolution>& s) {
    if (!s) return py::none();
    return py::make_tuple(py::cast(s->x), py::cast(s->y));
}

py::list coeffs(const hassett::IntPolynomial& p) {
    py::list out;
    for (const Int& c : p.coefficients()) out.append(py::cast(c));
    return out;
}

py::dict form_dict(const hassett::PolyQuadraticForm& f) {
    py::dict out;
    out["a"] = coeffs(f.a);
    out["b"] = coeffs(f.b);
    out["c"] = coeffs(f.c);
    return out;
}

py::dict report_dict(const hassett::ConditionReport& r) {
    py::dict out;
    out["d"] = py::cast(r.d);
    out["star"] = r.star;
    out["double_star"] = r.double_star;
    out["triple_star"] = r.triple_star;
    out["witness"] = witness_or_none(r.witness);
    out["pell"] = pell_or_none(r.pell);
    out["period_length"] = r.period_length ? py::cast(*r.period_length) : py::object(py::none());
    return out;
}

py::dict canonical_dict(const hassett::CanonicalForm& f) {
    py::dict out;
    out["geometry"] = hassett::to_string(f.geometry);
    out["case"] = hassett::to_string(f.case_id);
    out["c"] = py::cast(f.c);
    out["k"] = py::cast(f.k);
    out["gram"] = gram_rows(f.gram);
    out["disc"] = py::cast(f.disc());
    return out;
}

}  // namespace

PYBIND11_MODULE(hassett, m) {
    m.doc() = "Exact Diophantine and lattice arithmetic for special cubic fourfold discriminants";

    py::register_exception<hassett::AdmissibilityViolation>(m, "AdmissibilityViolation");
    py::register_exception<hassett::NormalizationFailure>(m, "NormalizationFailure");
    py::register_exception<hassett::InvalidPairing>(m, "InvalidPairing");

    m.def("condition_star", &hassett::condition_star, py::arg("d"),
          "d > 6 and d congruent to 0 or 2 mod 6");
    m.def("condition_double_star", &hassett::condition_double_star, py::arg("d"),
          "d free of 4, 9 and odd primes congruent to 2 mod 3");
    m.def(
        "condition_triple_star",
        [](const Int& d) {
            auto r = hassett::condition_triple_star(d);
            return py::make_tuple(r.solvable, witness_or_none(r.witness));
        },
        py::arg("d"), "solvability of a^2 d = 2n^2 + 2n + 2, with a witness when solvable");
    m.def(
        "check", [](const Int& d) { return report_dict(hassett::check_conditions(d)); },
        py::arg("d"), "full condition report for one discriminant");

    m.def(
        "factorize",
        [](const Int& n) {
            py::list out;
            for (const auto& [p, e] : hassett::factorize(n).factors) {
                out.append(py::make_tuple(py::cast(p), e));
            }
            return out;
        },
        py::arg("n"));
    m.def(
        "integer_sqrt_exact",
        [](const Int& n) -> py::object {
            auto r = hassett::integer_sqrt_exact(n);
            return r ? py::object(py::cast(*r)) : py::object(py::none());
        },
        py::arg("n"));

    m.def(
        "cf_sqrt",
        [](const Int& D) {
            auto cf = hassett::cf_sqrt(D);
            py::list period;
            for (const Int& a : cf.period) period.append(py::cast(a));
            return py::make_tuple(py::cast(cf.a0), period);
        },
        py::arg("D"), "continued fraction of sqrt(D): (a0, one period)");
    m.def(
        "pell_solve",
        [](const Int& D, const Int& N) { return pell_or_none(hassett::pell_solve(D, N)); },
        py::arg("D"), py::arg("N") = Int(-3), "least positive solution of x^2 - D y^2 = N, or None");
    m.def(
        "triple_star_bruteforce",
        [](const Int& d, const Int& a_max, const Int& n_max) {
            return witness_or_none(hassett::triple_star_bruteforce(d, a_max, n_max));
        },
        py::arg("d"), py::arg("a_max"), py::arg("n_max"));
    m.def(
        "witness_to_pell",
        [](const Int& a, const Int& n, const Int& d) {
            auto s = hassett::witness_to_pell({a, n}, d);
            return py::make_tuple(py::cast(s.x), py::cast(s.y));
        },
        py::arg("a"), py::arg("n"), py::arg("d"));
    m.def(
        "pell_to_witness",
        [](const Int& x, const Int& y, const Int& D) {
            auto w = hassett::pell_to_witness({x, y, D, -3});
            return py::make_tuple(py::cast(w.a), py::cast(w.n));
        },
        py::arg("x"), py::arg("y"), py::arg("D"));

    m.def("k8", [] { return gram_rows(hassett::k8()); });
    m.def("k18", [] { return gram_rows(hassett::k18()); });
    m.def(
        "discriminant",
        [](const std::vector<std::vector<Int>>& rows) {
            return hassett::discriminant(gram_from_rows(rows));
        },
        py::arg("gram"));
    m.def(
        "restrict_form",
        [](const std::vector<std::vector<Int>>& rows) {
            auto f = hassett::restrict_form(gram_from_rows(rows));
            return py::make_tuple(py::cast(f.a), py::cast(f.b), py::cast(f.c));
        },
        py::arg("gram"), "d(x,y) coefficients (a, b, c) of the rank-3 restriction form");
    m.def(
        "canonical_gram",
        [](const std::string& geometry, const std::string& case_id, const Int& c, const Int& k) {
            return gram_rows(hassett::canonical_gram(hassett::parse_geometry(geometry),
                                                     parse_case(case_id), c, k));
        },
        py::arg("geometry"), py::arg("case_id"), py::arg("c"), py::arg("k"));
    m.def(
        "case_discriminant",
        [](const std::string& geometry, const std::string& case_id, const Int& c) {
            return coeffs(hassett::case_discriminant(hassett::parse_geometry(geometry),
                                                     parse_case(case_id), c));
        },
        py::arg("geometry"), py::arg("case_id"), py::arg("c"));
    m.def(
        "normalize",
        [](const std::string& geometry, const Int& m, const Int& c, const Int& s) {
            return canonical_dict(
                hassett::normalize({hassett::parse_geometry(geometry), m, c, s}));
        },
        py::arg("geometry"), py::arg("m"), py::arg("c"), py::arg("s"));

    m.def("family_ids", [] {
        py::list out;
        for (const auto& spec : hassett::family_catalog()) out.append(hassett::to_string(spec.id));
        return out;
    });
    m.def(
        "family_witness",
        [](const std::string& id) {
            const auto& spec = hassett::family(parse_family(id));
            py::dict out;
            out["a"] = coeffs(spec.a);
            out["x"] = coeffs(spec.x);
            out["y"] = coeffs(spec.y);
            out["n"] = coeffs(spec.n);
            return out;
        },
        py::arg("id"));
    m.def(
        "derive_form",
        [](const std::string& id) {
            return form_dict(hassett::derive_form(hassett::family(parse_family(id))));
        },
        py::arg("id"));
    m.def(
        "verify_family_symbolic",
        [](const std::string& id, bool use_printed_form) {
            const auto& spec = hassett::family(parse_family(id));
            auto v = hassett::verify_family_symbolic(spec, use_printed_form);
            py::dict out;
            out["form"] = form_dict(v.form);
            out["lhs"] = coeffs(v.lhs);
            out["rhs"] = coeffs(v.rhs);
            out["ok"] = v.ok;
            return out;
        },
        py::arg("id"), py::arg("use_printed_form") = false);
    m.def(
        "verify_family_numeric",
        [](const std::string& id, const Int& k_min, const Int& k_max, bool use_printed_form) {
            const auto& spec = hassett::family(parse_family(id));
            py::list out;
            for (const auto& row :
                 hassett::verify_family_numeric(spec, k_min, k_max, use_printed_form)) {
                py::dict r;
                r["k"] = py::cast(row.k);
                r["d"] = py::cast(row.d);
                r["lhs"] = py::cast(row.lhs);
                r["rhs"] = py::cast(row.rhs);
                r["ok"] = row.ok;
                out.append(r);
            }
            return out;
        },
        py::arg("id"), py::arg("k_min"), py::arg("k_max"), py::arg("use_printed_form") = false);
    m.def("dp6_residue_equivalence_check", &hassett::dp6_residue_equivalence_check);

    m.attr("__version__") = "0.1.0";
}
