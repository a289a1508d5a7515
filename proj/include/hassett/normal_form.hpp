#pragma once

#include <stdexcept>
#include <string>

#include "hassett/lattice.hpp"

namespace hassett {

enum class Geometry { Plane, DP6 };

// Normal-form cases: two for the plane geometry, three (indexed by the
// residue b of H2.Sigma mod 3) for the sextic del Pezzo geometry.
enum class NormalCase { PlaneI, PlaneII, B0, B1, B2 };

std::string to_string(Geometry g);
std::string to_string(NormalCase c);

// Raised when 3s - m^2 is not congruent to 0 or 2 mod 6; such data cannot
// come from an algebraic class.
struct AdmissibilityViolation : std::domain_error {
    explicit AdmissibilityViolation(const std::string& what) : std::domain_error(what) {}
};

// Raised when the pairing value c is outside the range the normal forms cover
// (plane requires c = 1, del Pezzo requires c in {0,1,2}).
struct InvalidPairing : std::invalid_argument {
    explicit InvalidPairing(const std::string& what) : std::invalid_argument(what) {}
};

// Raised if the bounded transformation search cannot reach a normal form for
// admissible input. The orbit analysis says this cannot happen; if it fires,
// suspect the search bound, not the input.
struct NormalizationFailure : std::runtime_error {
    explicit NormalizationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Intersection data of a marked class Sigma against the rank-2 pairing of its
// geometry: m = H2.Sigma, c = Q.Sigma (plane) or S.Sigma (del Pezzo),
// s = Sigma^2.
struct MarkedClassData {
    Geometry geometry;
    Int m;
    Int c;
    Int s;
};

// 3s - m^2 ≡ 0 or 2 (mod 6); equivalently disc<H2, Sigma> lies in the
// congruence classes admissible for a nonempty discriminant locus.
bool admissible(const MarkedClassData& d);

// The full rank-3 Gram matrix of (H2, Q-or-S, Sigma) carried by the data.
GramMatrix input_gram(const MarkedClassData& d);

struct CanonicalForm {
    Geometry geometry;
    NormalCase case_id;
    Int c;  // pairing with the quadric/del Pezzo class; 1 for plane
    Int k;
    GramMatrix gram;
    Int disc() const { return discriminant(gram); }
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// The displayed normal-form matrix for the given case:
//   Plane I    [[3,2,0],[2,4,1],[0,1,2k]]
//   Plane II   [[3,2,1],[2,4,1],[1,1,2k+1]]
//   DP6 B0     [[3,6,0],[6,18,c],[0,c,2k]]
//   DP6 B1     [[3,6,1],[6,18,c],[1,c,2k+1]]
//   DP6 B2     [[3,6,2],[6,18,c],[2,c,2k]]
// c is ignored (fixed to 1) for the plane cases.
GramMatrix canonical_gram(Geometry g, NormalCase case_id, const Int& c, const Int& k);

// Same matrices with the Sigma^2 slot left as a polynomial in k.
SymbolicGram canonical_gram_symbolic(Geometry g, NormalCase case_id, const Int& c);

// Closed-form discriminant of the case as a polynomial in k:
// 16k-3, 16k+5, 36k-3c^2, 36k-3c^2+12c, 36k-3c^2+24c-72.
IntPolynomial case_discriminant(Geometry g, NormalCase case_id, const Int& c);

// Writes m = 3a + b with b in {0,1,2} and substitutes
// Sigma -> Sigma - 3a*H2 + a*S, recomputing Sigma^2 from the bilinear form.
CanonicalForm normalize_dp6(const MarkedClassData& d);

// Brings H2.Sigma to 0 (case I) or 1 (case II) by integer transformations
// Sigma -> eps*Sigma + alpha*H2 + beta*Q with eps = +-1 constrained to
// preserve Q.Sigma = 1. Each step is found by exhaustive search over
// |alpha|, |beta| <= 8, first hit wins, ties broken by eps = +1 first and
// then smallest |alpha| + |beta|; when m starts outside the reach of a
// single step, in-bound reducing steps are composed first.
CanonicalForm normalize_plane(const MarkedClassData& d);

// Dispatch on d.geometry.
CanonicalForm normalize(const MarkedClassData& d);

Geometry parse_geometry(std::string_view text);

}  // namespace hassett
