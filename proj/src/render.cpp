#include "hassett/render.hpp"

#include <sstream>

namespace hassett {

namespace {

std::string witness_object(const TripleStarWitness& w) {
    JsonWriter::Object o;
    o.add("a", JsonWriter::integer(w.a)).add("n", JsonWriter::integer(w.n));
    return o.str();
}

std::string pell_object(const PellSolution& s) {
    JsonWriter::Object o;
    o.add("x", JsonWriter::integer(s.x)).add("y", JsonWriter::integer(s.y));
    return o.str();
}

std::string form_object(const PolyQuadraticForm& f) {
    JsonWriter::Object o;
    o.add("a", json_coefficients(f.a))
        .add("b", json_coefficients(f.b))
        .add("c", json_coefficients(f.c));
    return o.str();
}

std::string bool_word(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string JsonWriter::string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += ch;
        }
    }
    out += '"';
    return out;
}

JsonWriter::Array& JsonWriter::Array::push(std::string serialized) {
    if (!body_.empty()) body_ += ',';
    body_ += serialized;
    return *this;
}

JsonWriter::Object& JsonWriter::Object::add(std::string_view key, std::string serialized) {
    if (!body_.empty()) body_ += ',';
    body_ += JsonWriter::string(key);
    body_ += ':';
    body_ += serialized;
    return *this;
}

std::string json_coefficients(const IntPolynomial& p) {
    JsonWriter::Array arr;
    for (const Int& c : p.coefficients()) arr.push(JsonWriter::integer(c));
    return arr.str();
}

std::string json_gram(const GramMatrix& g) {
    JsonWriter::Array rows;
    for (const auto& row : g.rows()) {
        JsonWriter::Array r;
        for (const Int& e : row) r.push(JsonWriter::integer(e));
        rows.push(r.str());
    }
    return rows.str();
}

std::string json_check_report(const ConditionReport& r) {
    JsonWriter::Object o;
    o.add("d", JsonWriter::integer(r.d))
        .add("star", JsonWriter::boolean(r.star))
        .add("double_star", JsonWriter::boolean(r.double_star))
        .add("triple_star", JsonWriter::boolean(r.triple_star))
        .add("witness", r.witness ? witness_object(*r.witness) : JsonWriter::null())
        .add("pell", r.pell ? pell_object(*r.pell) : JsonWriter::null())
        .add("period_length",
             r.period_length ? JsonWriter::integer(Int(*r.period_length)) : JsonWriter::null());
    return o.str();
}

std::string json_canonical_form(const CanonicalForm& f) {
    JsonWriter::Object o;
    o.add("geometry", JsonWriter::string(to_string(f.geometry)))
        .add("case", JsonWriter::string(to_string(f.case_id)))
        .add("c", JsonWriter::integer(f.c))
        .add("k", JsonWriter::integer(f.k))
        .add("gram", json_gram(f.gram))
        .add("disc", JsonWriter::integer(f.disc()));
    return o.str();
}

std::string json_pell(const Int& D, const Int& N, const PellOutcome& outcome) {
    JsonWriter::Object o;
    o.add("D", JsonWriter::integer(D))
        .add("N", JsonWriter::integer(N))
        .add("solution", outcome.solution ? pell_object(*outcome.solution) : JsonWriter::null())
        .add("period_length", outcome.period_length
                                  ? JsonWriter::integer(Int(*outcome.period_length))
                                  : JsonWriter::null());
    return o.str();
}

std::string json_disc(const GramMatrix& g, const Int& disc) {
    JsonWriter::Object o;
    o.add("gram", json_gram(g)).add("disc", JsonWriter::integer(disc));
    return o.str();
}

std::string json_family_list() {
    JsonWriter::Array arr;
    for (const FamilySpec& spec : family_catalog()) {
        JsonWriter::Object w;
        w.add("a", json_coefficients(spec.a))
            .add("x", json_coefficients(spec.x))
            .add("y", json_coefficients(spec.y))
            .add("n", json_coefficients(spec.n));
        JsonWriter::Object o;
        o.add("id", JsonWriter::string(to_string(spec.id)))
            .add("geometry", JsonWriter::string(to_string(spec.geometry)))
            .add("case", JsonWriter::string(to_string(spec.case_id)))
            .add("c", JsonWriter::integer(spec.c))
            .add("witness", w.str())
            .add("printed_form", form_object(spec.printed_form));
        arr.push(o.str());
    }
    return arr.str();
}

std::string json_family_symbolic(const FamilySpec& spec, const SymbolicVerification& v,
                                 bool use_printed_form) {
    JsonWriter::Object o;
    o.add("id", JsonWriter::string(to_string(spec.id)))
        .add("mode", JsonWriter::string("symbolic"))
        .add("use_printed_form", JsonWriter::boolean(use_printed_form))
        .add("form", form_object(v.form))
        .add("lhs", json_coefficients(v.lhs))
        .add("rhs", json_coefficients(v.rhs))
        .add("ok", JsonWriter::boolean(v.ok));
    return o.str();
}

std::string json_family_numeric(const FamilySpec& spec, const std::vector<FamilyRow>& rows,
                                const Int& k_min, const Int& k_max, bool use_printed_form) {
    JsonWriter::Array arr;
    bool all_ok = true;
    for (const FamilyRow& row : rows) {
        all_ok = all_ok && row.ok;
        JsonWriter::Object o;
        o.add("k", JsonWriter::integer(row.k))
            .add("d", JsonWriter::integer(row.d))
            .add("lhs", JsonWriter::integer(row.lhs))
            .add("rhs", JsonWriter::integer(row.rhs))
            .add("ok", JsonWriter::boolean(row.ok));
        arr.push(o.str());
    }
    JsonWriter::Object o;
    o.add("id", JsonWriter::string(to_string(spec.id)))
        .add("mode", JsonWriter::string("numeric"))
        .add("use_printed_form", JsonWriter::boolean(use_printed_form))
        .add("k_min", JsonWriter::integer(k_min))
        .add("k_max", JsonWriter::integer(k_max))
        .add("rows", arr.str())
        .add("ok", JsonWriter::boolean(all_ok));
    return o.str();
}

std::string text_check_report(const ConditionReport& r) {
    std::ostringstream os;
    os << "d = " << r.d << "\n";
    os << "(*)   d > 6 and d = 0,2 (mod 6)      : " << bool_word(r.star) << "\n";
    os << "(**)  no 4, 9, odd prime = 2 (mod 3) : " << bool_word(r.double_star) << "\n";
    os << "(***) a^2 d = 2n^2+2n+2 solvable     : " << bool_word(r.triple_star) << "\n";
    if (r.witness) os << "witness: a = " << r.witness->a << ", n = " << r.witness->n << "\n";
    if (r.pell) {
        os << "pell: x = " << r.pell->x << ", y = " << r.pell->y << "  (x^2 - " << r.pell->D
           << " y^2 = " << r.pell->N << ")\n";
    }
    if (r.period_length) os << "cf period of sqrt(" << 2 * r.d << "): " << *r.period_length << "\n";
    return os.str();
}

std::string text_canonical_form(const CanonicalForm& f) {
    std::ostringstream os;
    os << "geometry: " << to_string(f.geometry) << "\n";
    os << "case: " << to_string(f.case_id) << "\n";
    os << "c = " << f.c << ", k = " << f.k << "\n";
    os << "gram: " << format_gram(f.gram) << "\n";
    os << "disc = " << f.disc() << "\n";
    return os.str();
}

std::string text_pell(const Int& D, const Int& N, const PellOutcome& outcome) {
    std::ostringstream os;
    os << "x^2 - " << D << " y^2 = " << N << "\n";
    if (outcome.solution) {
        os << "solution: x = " << outcome.solution->x << ", y = " << outcome.solution->y << "\n";
    } else {
        os << "solution: none\n";
    }
    if (outcome.period_length) os << "cf period of sqrt(" << D << "): " << *outcome.period_length << "\n";
    return os.str();
}

std::string text_family_list() {
    std::ostringstream os;
    for (const FamilySpec& spec : family_catalog()) {
        os << to_string(spec.id) << ": " << to_string(spec.geometry) << " case "
           << to_string(spec.case_id) << ", c = " << spec.c << ", witness (a, x, y, n) = ("
           << spec.a.str() << ", " << spec.x.str() << ", " << spec.y.str() << ", " << spec.n.str()
           << ")\n";
    }
    return os.str();
}

std::string text_family_symbolic(const FamilySpec& spec, const SymbolicVerification& v,
                                 bool use_printed_form) {
    std::ostringstream os;
    os << "family " << to_string(spec.id) << (use_printed_form ? " (printed form)" : "") << "\n";
    os << "d(x,y) = (" << v.form.a.str() << ") x^2 + (" << v.form.b.str() << ") xy + ("
       << v.form.c.str() << ") y^2\n";
    os << "a^2 d(x,y)    = " << v.lhs.str() << "\n";
    os << "2n^2 + 2n + 2 = " << v.rhs.str() << "\n";
    os << (v.ok ? "identity holds for every k" : "identity FAILS") << "\n";
    return os.str();
}

std::string text_family_numeric(const FamilySpec& spec, const std::vector<FamilyRow>& rows) {
    std::ostringstream os;
    os << "family " << to_string(spec.id) << "\n";
    bool all_ok = true;
    for (const FamilyRow& row : rows) {
        all_ok = all_ok && row.ok;
        os << "k = " << row.k << ": d = " << row.d << ", lhs = " << row.lhs << ", rhs = " << row.rhs
           << ", " << (row.ok ? "ok" : "FAIL") << "\n";
    }
    os << (all_ok ? "all rows ok" : "FAILURES present") << "\n";
    return os.str();
}

std::string text_enumerate_row(const ConditionReport& r) {
    std::ostringstream os;
    os << "d = " << r.d << "  (*) " << bool_word(r.star) << "  (**) " << bool_word(r.double_star)
       << "  (***) " << bool_word(r.triple_star);
    if (r.witness) os << "  witness (a, n) = (" << r.witness->a << ", " << r.witness->n << ")";
    return os.str();
}

std::string csv_report_header() { return "d,star,double_star,triple_star,a,n,period_length"; }

std::string csv_report_row(const ConditionReport& r) {
    std::ostringstream os;
    os << r.d << "," << bool_word(r.star) << "," << bool_word(r.double_star) << ","
       << bool_word(r.triple_star) << ",";
    if (r.witness) os << r.witness->a;
    os << ",";
    if (r.witness) os << r.witness->n;
    os << ",";
    if (r.period_length) os << *r.period_length;
    return os.str();
}

std::string csv_family_header() { return "k,d,lhs,rhs,ok"; }

std::string csv_family_row(const FamilyRow& row) {
    std::ostringstream os;
    os << row.k << "," << row.d << "," << row.lhs << "," << row.rhs << "," << bool_word(row.ok);
    return os.str();
}

}  // namespace hassett
