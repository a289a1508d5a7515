#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hassett/diophantine.hpp"
#include "hassett/normal_form.hpp"

namespace hassett {

enum class FamilyId { PlaneI, PlaneII, A, B, C, D, E, F };

std::string to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view text);

// A parametric witness family: for every integer k the tuple
// (a(k), x(k), y(k), n(k)) solves a(k)^2 * d(x(k), y(k)) = 2n(k)^2 + 2n(k) + 2,
// where d is the restriction form of the family's normal-form Gram matrix.
struct FamilySpec {
    FamilyId id;
    Geometry geometry;
    NormalCase case_id;
    Int c;
    IntPolynomial a, x, y, n;
    // The d(x,y) coefficients as printed alongside the witnesses in the
    // source derivation. For family C the printed y^2 coefficient (5k-4)
    // disagrees with the Gram-derived one (6k-4); the witness only validates
    // against the derived form, so the printed version is kept as a pinned
    // regression, never as an input to derivation.
    PolyQuadraticForm printed_form;
};

const std::vector<FamilySpec>& family_catalog();
const FamilySpec& family(FamilyId id);

// The authoritative d(x,y): restrict_form applied to the family's symbolic
// normal-form Gram matrix. Never transcribed coefficients.
PolyQuadraticForm derive_form(const FamilySpec& spec);

// Expands both sides of the defining identity as polynomials in k.
struct SymbolicVerification {
    PolyQuadraticForm form;
    IntPolynomial lhs;  // a(k)^2 * d(x(k), y(k))
    IntPolynomial rhs;  // 2n(k)^2 + 2n(k) + 2
    bool ok = false;
};
SymbolicVerification verify_family_symbolic(const FamilySpec& spec, bool use_printed_form = false);

// Exact per-k evaluation. Whenever the evaluated d is >= 1 the Pell-based
// (***) decision is cross-checked and must confirm solvability; rows with
// d < 1 skip that check (the condition has no geometric content there).
struct FamilyRow {
    Int k, d, lhs, rhs;
    bool identity_ok = false;
    bool triple_star_checked = false;
    bool triple_star_ok = false;
    bool ok = false;
};
std::vector<FamilyRow> verify_family_numeric(const FamilySpec& spec, const Int& k_min,
                                             const Int& k_max, bool use_printed_form = false);

// Finite verification of the mod-6 argument for rational sections of the
// del Pezzo fibration: for every residue r0 of Sigma.S mod 6, the class
// {±r0} meets {1, 2} exactly when {r0, r0+3} meets {1, 5}.
struct ResidueReach {
    bool pairing_side = false;  // {r0, -r0} mod 6 meets {1, 2}
    bool fiber_side = false;    // {r0 - 3t} mod 6 meets {1, 5}
};
ResidueReach dp6_residue_reach(const Int& r0);
bool dp6_residue_equivalence_check();

}  // namespace hassett
