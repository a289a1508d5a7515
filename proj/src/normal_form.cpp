#include "hassett/normal_form.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace hassett {

namespace {

constexpr const char* kSigmaLabel = "Sigma";

struct SigmaTransform {
    // Sigma' = alpha*e1 + beta*e2 + eps*Sigma, eps in {+1,-1}. The basis
    // change fixes e1 and e2, so |det| = 1 and the discriminant is preserved.
    Int alpha;
    Int beta;
    int eps;
};

// Conjugates the rank-3 Gram matrix by the transform, recomputing the whole
// Sigma row from the bilinear form rather than from any case table.
std::vector<std::vector<Int>> apply_sigma_transform(const std::vector<std::vector<Int>>& g,
                                                    const SigmaTransform& t) {
    const std::array<Int, 3> v = {t.alpha, t.beta, Int(t.eps)};
    auto pair_with = [&](int i) {
        Int out = 0;
        for (int j = 0; j < 3; ++j) out += v[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return out;
    };
    Int self = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            self += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] *
                    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    auto out = g;
    for (int i = 0; i < 2; ++i) {
        out[static_cast<std::size_t>(i)][2] = pair_with(i);
        out[2][static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)][2];
    }
    out[2][2] = self;
    return out;
}

void require_admissible(const MarkedClassData& d) {
    if (!admissible(d)) {
        const Int value = 3 * d.s - d.m * d.m;
        std::ostringstream os;
        os << "admissibility violated: 3s - m^2 = " << value << " = " << mod_floor(value, 6)
           << " (mod 6), expected 0 or 2";
        throw AdmissibilityViolation(os.str());
    }
}

Int k_from_sigma_sq(const Int& sigma_sq, bool odd_case) {
    const bool is_odd = mod_floor(sigma_sq, 2) == 1;
    if (is_odd != odd_case) {
        throw NormalizationFailure("normalized Sigma^2 has the wrong parity for its case");
    }
    return odd_case ? Int((sigma_sq - 1) / 2) : Int(sigma_sq / 2);
}

CanonicalForm finish(const MarkedClassData& input, Geometry geom, NormalCase case_id,
                     const Int& c, const std::vector<std::vector<Int>>& reduced) {
    const bool odd_case = (case_id == NormalCase::PlaneII || case_id == NormalCase::B1);
    const Int k = k_from_sigma_sq(reduced[2][2], odd_case);
    CanonicalForm out{geom, case_id, c, k, canonical_gram(geom, case_id, c, k)};
    if (!(out.gram.rows() == reduced)) {
        throw NormalizationFailure("reduced Gram matrix does not match its normal form");
    }
    if (out.disc() != discriminant(input_gram(input))) {
        throw NormalizationFailure("normalization changed the discriminant");
    }
    return out;
}

}  // namespace

std::string to_string(Geometry g) {
    return g == Geometry::Plane ? "plane" : "dp6";
}

std::string to_string(NormalCase c) {
    switch (c) {
        case NormalCase::PlaneI: return "I";
        case NormalCase::PlaneII: return "II";
        case NormalCase::B0: return "B0";
        case NormalCase::B1: return "B1";
        case NormalCase::B2: return "B2";
    }
    throw std::logic_error("unreachable");
}

Geometry parse_geometry(std::string_view text) {
    if (text == "plane") return Geometry::Plane;
    if (text == "dp6") return Geometry::DP6;
    throw std::invalid_argument("geometry must be 'plane' or 'dp6'");
}

bool admissible(const MarkedClassData& d) {
    const Int r = mod_floor(3 * d.s - d.m * d.m, 6);
    return r == 0 || r == 2;
}

GramMatrix input_gram(const MarkedClassData& d) {
    const GramMatrix base = d.geometry == Geometry::Plane ? k8() : k18();
    return GramMatrix({{base.at(0, 0), base.at(0, 1), d.m},
                       {base.at(0, 1), base.at(1, 1), d.c},
                       {d.m, d.c, d.s}},
                      {base.basis_labels()[0], base.basis_labels()[1], kSigmaLabel});
}

GramMatrix canonical_gram(Geometry g, NormalCase case_id, const Int& c, const Int& k) {
    if (g == Geometry::Plane) {
        switch (case_id) {
            case NormalCase::PlaneI:
                return GramMatrix({{3, 2, 0}, {2, 4, 1}, {0, 1, 2 * k}}, {"H2", "Q", kSigmaLabel});
            case NormalCase::PlaneII:
                return GramMatrix({{3, 2, 1}, {2, 4, 1}, {1, 1, 2 * k + 1}}, {"H2", "Q", kSigmaLabel});
            default:
                throw std::invalid_argument("canonical_gram: plane cases are I and II");
        }
    }
    if (c < 0 || c > 2) throw InvalidPairing("canonical_gram: dp6 requires c in {0,1,2}");
    switch (case_id) {
        case NormalCase::B0:
            return GramMatrix({{3, 6, 0}, {6, 18, c}, {0, c, 2 * k}}, {"H2", "S", kSigmaLabel});
        case NormalCase::B1:
            return GramMatrix({{3, 6, 1}, {6, 18, c}, {1, c, 2 * k + 1}}, {"H2", "S", kSigmaLabel});
        case NormalCase::B2:
            return GramMatrix({{3, 6, 2}, {6, 18, c}, {2, c, 2 * k}}, {"H2", "S", kSigmaLabel});
        default:
            throw std::invalid_argument("canonical_gram: dp6 cases are B0, B1 and B2");
    }
}

SymbolicGram canonical_gram_symbolic(Geometry g, NormalCase case_id, const Int& c) {
    const bool odd_case = (case_id == NormalCase::PlaneII || case_id == NormalCase::B1);
    const GramMatrix at_zero = canonical_gram(g, case_id, c, 0);
    return SymbolicGram(at_zero, odd_case ? IntPolynomial{1, 2} : IntPolynomial{0, 2});
}

IntPolynomial case_discriminant(Geometry g, NormalCase case_id, const Int& c) {
    if (g == Geometry::Plane) {
        switch (case_id) {
            case NormalCase::PlaneI: return IntPolynomial{-3, 16};
            case NormalCase::PlaneII: return IntPolynomial{5, 16};
            default: throw std::invalid_argument("case_discriminant: plane cases are I and II");
        }
    }
    if (c < 0 || c > 2) throw InvalidPairing("case_discriminant: dp6 requires c in {0,1,2}");
    switch (case_id) {
        case NormalCase::B0: return IntPolynomial{-3 * c * c, 36};
        case NormalCase::B1: return IntPolynomial{-3 * c * c + 12 * c, 36};
        case NormalCase::B2: return IntPolynomial{-3 * c * c + 24 * c - 72, 36};
        default: throw std::invalid_argument("case_discriminant: dp6 cases are B0, B1 and B2");
    }
}

CanonicalForm normalize_dp6(const MarkedClassData& d) {
    if (d.geometry != Geometry::DP6) throw std::invalid_argument("normalize_dp6: geometry must be dp6");
    if (d.c < 0 || d.c > 2) throw InvalidPairing("normalize_dp6: pairing Sigma.S must be 0, 1 or 2");
    require_admissible(d);

    // m = 3a + b with 0 <= b <= 2; Sigma' = Sigma - 3a*H2 + a*S has
    // H2.Sigma' = b and S.Sigma' = c.
    const Int b = mod_floor(d.m, 3);
    const Int a = (d.m - b) / 3;
    const auto reduced = apply_sigma_transform(input_gram(d).rows(), {-3 * a, a, +1});
    if (reduced[0][2] != b || reduced[1][2] != d.c) {
        throw NormalizationFailure("dp6 substitution did not reach its normal pairing values");
    }
    const NormalCase case_id = b == 0 ? NormalCase::B0 : b == 1 ? NormalCase::B1 : NormalCase::B2;
    return finish(d, Geometry::DP6, case_id, d.c, reduced);
}

CanonicalForm normalize_plane(const MarkedClassData& d) {
    if (d.geometry != Geometry::Plane) throw std::invalid_argument("normalize_plane: geometry must be plane");
    if (d.c != 1) throw InvalidPairing("normalize_plane: pairing Sigma.Q must be 1");
    require_admissible(d);

    // Candidates preserving Q.Sigma = 1: eps=+1 forces alpha = -2*beta,
    // eps=-1 forces alpha = 1 - 2*beta. Enumerated with |alpha|,|beta| <= 8,
    // eps=+1 block first, each block sorted by |alpha|+|beta|.
    std::vector<SigmaTransform> candidates;
    for (int eps : {+1, -1}) {
        std::vector<SigmaTransform> block;
        for (Int beta = -8; beta <= 8; ++beta) {
            Int alpha = eps == +1 ? Int(-2 * beta) : Int(1 - 2 * beta);
            if (abs(alpha) > 8) continue;
            block.push_back({alpha, beta, eps});
        }
        std::stable_sort(block.begin(), block.end(), [](const SigmaTransform& x, const SigmaTransform& y) {
            return abs(x.alpha) + abs(x.beta) < abs(y.alpha) + abs(y.beta);
        });
        candidates.insert(candidates.end(), block.begin(), block.end());
    }

    auto gram = input_gram(d).rows();
    // A single in-bound step moves m by at most 16, so compose reducing
    // steps until a finishing candidate exists.
    for (Int guard = abs(d.m) / 8 + 4; guard > 0; --guard) {
        const Int m = gram[0][2];
        for (const auto& t : candidates) {
            const Int target = t.eps * m + 3 * t.alpha + 2 * t.beta;
            if (target == 0 || target == 1) {
                const auto reduced = apply_sigma_transform(gram, t);
                const NormalCase case_id = target == 0 ? NormalCase::PlaneI : NormalCase::PlaneII;
                return finish(d, Geometry::Plane, case_id, 1, reduced);
            }
        }
        gram = apply_sigma_transform(gram, {m > 0 ? Int(-8) : Int(8), m > 0 ? Int(4) : Int(-4), +1});
    }
    throw NormalizationFailure("plane normalization did not terminate within its step bound");
}

CanonicalForm normalize(const MarkedClassData& d) {
    return d.geometry == Geometry::Plane ? normalize_plane(d) : normalize_dp6(d);
}

}  // namespace hassett
