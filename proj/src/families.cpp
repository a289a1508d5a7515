#include "hassett/families.hpp"

#include <stdexcept>

namespace hassett {

namespace {

using P = IntPolynomial;

FamilySpec make(FamilyId id, Geometry geom, NormalCase case_id, Int c, P a, P x, P y, P n,
                PolyQuadraticForm printed) {
    return {id, geom, case_id, std::move(c), std::move(a), std::move(x), std::move(y),
            std::move(n), std::move(printed)};
}

std::vector<FamilySpec> build_catalog() {
    // Witness polynomials stored with canonical coefficients; e.g. the
    // plane-I n-component 2(1-3k) is stored expanded as 2 - 6k.
    std::vector<FamilySpec> out;
    out.push_back(make(FamilyId::PlaneI, Geometry::Plane, NormalCase::PlaneI, 1,
                       P{1}, P{1, -3}, P{1}, P{2, -6},
                       {P{8}, P{6}, P{0, 6}}));
    out.push_back(make(FamilyId::PlaneII, Geometry::Plane, NormalCase::PlaneII, 1,
                       P{1}, P{0, 3}, P{1}, P{0, 6},
                       {P{8}, P{2}, P{2, 6}}));
    out.push_back(make(FamilyId::A, Geometry::DP6, NormalCase::B0, 1,
                       P{1}, P{-1, 4}, P{2}, P{-2, 12},
                       {P{18}, P{6}, P{0, 6}}));
    out.push_back(make(FamilyId::B, Geometry::DP6, NormalCase::B1, 1,
                       P{1}, P{1, 4}, P{2}, P{2, 12},
                       {P{18}, P{-6}, P{2, 6}}));
    out.push_back(make(FamilyId::C, Geometry::DP6, NormalCase::B2, 1,
                       P{1}, P{-5, 4}, P{2}, P{-18, 12},
                       {P{18}, P{-18}, P{-4, 5}}));  // printed 5k-4; derived is 6k-4
    out.push_back(make(FamilyId::D, Geometry::DP6, NormalCase::B0, 2,
                       P{1}, P{-1, 1}, P{1}, P{-2, 3},
                       {P{18}, P{12}, P{0, 6}}));
    out.push_back(make(FamilyId::E, Geometry::DP6, NormalCase::B1, 2,
                       P{1}, P{0, 1}, P{1}, P{0, 3},
                       {P{18}, P{0}, P{2, 6}}));
    out.push_back(make(FamilyId::F, Geometry::DP6, NormalCase::B2, 2,
                       P{1}, P{-1, 1}, P{1}, P{-4, 3},
                       {P{18}, P{-12}, P{-4, 6}}));
    return out;
}

}  // namespace

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::PlaneI: return "PlaneI";
        case FamilyId::PlaneII: return "PlaneII";
        case FamilyId::A: return "A";
        case FamilyId::B: return "B";
        case FamilyId::C: return "C";
        case FamilyId::D: return "D";
        case FamilyId::E: return "E";
        case FamilyId::F: return "F";
    }
    throw std::logic_error("unreachable");
}

std::optional<FamilyId> parse_family_id(std::string_view text) {
    for (const auto& spec : family_catalog()) {
        if (text == to_string(spec.id)) return spec.id;
    }
    return std::nullopt;
}

const std::vector<FamilySpec>& family_catalog() {
    static const std::vector<FamilySpec> catalog = build_catalog();
    return catalog;
}

const FamilySpec& family(FamilyId id) {
    for (const auto& spec : family_catalog()) {
        if (spec.id == id) return spec;
    }
    throw std::logic_error("unreachable");
}

PolyQuadraticForm derive_form(const FamilySpec& spec) {
    return restrict_form(canonical_gram_symbolic(spec.geometry, spec.case_id, spec.c));
}

SymbolicVerification verify_family_symbolic(const FamilySpec& spec, bool use_printed_form) {
    SymbolicVerification out;
    out.form = use_printed_form ? spec.printed_form : derive_form(spec);
    out.lhs = spec.a * spec.a * eval_form(out.form, spec.x, spec.y);
    out.rhs = compose(IntPolynomial{2, 2, 2}, spec.n);
    out.ok = out.lhs == out.rhs;
    return out;
}

std::vector<FamilyRow> verify_family_numeric(const FamilySpec& spec, const Int& k_min,
                                             const Int& k_max, bool use_printed_form) {
    if (k_min > k_max) throw std::invalid_argument("verify_family_numeric: k_min must be <= k_max");
    const PolyQuadraticForm form = use_printed_form ? spec.printed_form : derive_form(spec);
    std::vector<FamilyRow> rows;
    for (Int k = k_min; k <= k_max; ++k) {
        FamilyRow row;
        row.k = k;
        const Int a = spec.a(k);
        row.d = eval_form(form.at_k(k), spec.x(k), spec.y(k));
        row.lhs = a * a * row.d;
        const Int n = spec.n(k);
        row.rhs = 2 * n * n + 2 * n + 2;
        row.identity_ok = row.lhs == row.rhs;
        if (row.d >= 1) {
            row.triple_star_checked = true;
            row.triple_star_ok = condition_triple_star(row.d).solvable;
        }
        row.ok = row.identity_ok && (!row.triple_star_checked || row.triple_star_ok);
        rows.push_back(std::move(row));
    }
    return rows;
}

ResidueReach dp6_residue_reach(const Int& r0) {
    const Int r = mod_floor(r0, 6);
    const Int neg = mod_floor(-r, 6);
    const Int shifted = mod_floor(r + 3, 6);
    ResidueReach out;
    out.pairing_side = r == 1 || r == 2 || neg == 1 || neg == 2;
    out.fiber_side = r == 1 || r == 5 || shifted == 1 || shifted == 5;
    return out;
}

bool dp6_residue_equivalence_check() {
    for (Int r0 = 0; r0 < 6; ++r0) {
        const ResidueReach reach = dp6_residue_reach(r0);
        if (reach.pairing_side != reach.fiber_side) return false;
    }
    return true;
}

}  // namespace hassett
