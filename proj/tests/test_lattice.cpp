#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hassett/lattice.hpp"

using hassett::GramMatrix;
using hassett::Int;
using hassett::IntPolynomial;
using hassett::QuadraticForm;
using hassett::SymbolicGram;

namespace {

// Independent determinant oracle: signed permutation expansion. The library
// uses cofactor formulas; any transcription slip shows up against this.
Int oracle_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Int det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        Int term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::vector<Int>> random_symmetric3(std::mt19937_64& rng, bool square3_corner) {
    std::uniform_int_distribution<int> entry(-9, 9);
    std::vector<std::vector<Int>> m(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    if (square3_corner) m[0][0] = 3;
    return m;
}

// Random unimodular 3x3 as a product of elementary row additions and sign
// flips; |det| = 1 by construction.
std::vector<std::vector<Int>> random_unimodular3(std::mt19937_64& rng) {
    std::vector<std::vector<Int>> u(3, std::vector<Int>(3, 0));
    for (int i = 0; i < 3; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> scale(-3, 3);
    for (int step = 0; step < 8; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            if (scale(rng) < 0) {
                for (int t = 0; t < 3; ++t) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *= -1;
            }
            continue;
        }
        const Int c = scale(rng);
        for (int t = 0; t < 3; ++t) {
            u[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] +=
                c * u[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
        }
    }
    return u;
}

std::vector<std::vector<Int>> congruence(const std::vector<std::vector<Int>>& u,
                                         const std::vector<std::vector<Int>>& g) {
    auto mul = [](const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b) {
        std::vector<std::vector<Int>> out(3, std::vector<Int>(3, 0));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                for (int t = 0; t < 3; ++t) {
                    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                        b[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                }
            }
        }
        return out;
    };
    std::vector<std::vector<Int>> ut(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            ut[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
    }
    return mul(mul(ut, g), u);
}

GramMatrix gram3(std::vector<std::vector<Int>> rows) {
    return GramMatrix(std::move(rows), {"e1", "e2", "e3"});
}

}  // namespace

TEST_CASE("k8 and k18 pairings") {
    const GramMatrix g8 = hassett::k8();
    CHECK(g8.rows() == std::vector<std::vector<Int>>{{3, 2}, {2, 4}});
    CHECK(g8.basis_labels() == std::vector<std::string>{"H2", "Q"});
    CHECK(hassett::discriminant(g8) == 8);

    const GramMatrix g18 = hassett::k18();
    CHECK(g18.rows() == std::vector<std::vector<Int>>{{3, 6}, {6, 18}});
    CHECK(g18.basis_labels() == std::vector<std::string>{"H2", "S"});
    CHECK(hassett::discriminant(g18) == 18);
}

TEST_CASE("construction enforces shape, symmetry and labels") {
    CHECK_THROWS_AS(GramMatrix({{3, 2}, {9, 4}}, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(GramMatrix({{3, 2, 0}, {2, 4, 1}}, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(GramMatrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                               {"a", "b", "c", "d"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GramMatrix({{3, 2}, {2, 4}}, {"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(GramMatrix({{3, 2}, {2, 4}}, {"a"}), std::invalid_argument);
    CHECK_NOTHROW(GramMatrix({{3}}, {"H2"}));
}

TEST_CASE("discriminant examples cross-checked against the permutation oracle") {
    const GramMatrix plane_k1 = gram3({{3, 2, 0}, {2, 4, 1}, {0, 1, 2}});
    CHECK(hassett::discriminant(plane_k1) == 13);  // 16*1 - 3
    CHECK(oracle_det(plane_k1.rows()) == 13);

    CHECK(hassett::discriminant(GramMatrix({{3}}, {"H2"})) == 3);

    const GramMatrix dp6 = gram3({{3, 6, 0}, {6, 18, 1}, {0, 1, -28}});
    CHECK(hassett::discriminant(dp6) == -507);  // 36*(-14) - 3
    CHECK(oracle_det(dp6.rows()) == -507);
}

TEST_CASE("discriminant equals the permutation oracle on random matrices") {
    std::mt19937_64 rng(0xd15c0);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = random_symmetric3(rng, false);
        CHECK(hassett::discriminant(gram3(rows)) == oracle_det(rows));
    }
}

TEST_CASE("discriminant is invariant under unimodular congruence") {
    std::mt19937_64 rng(0xab5eed);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_symmetric3(rng, false);
        const Int d = hassett::discriminant(gram3(g));
        for (int rep = 0; rep < 50; ++rep) {
            auto u = random_unimodular3(rng);
            CHECK(hassett::discriminant(gram3(congruence(u, g))) == d);
        }
    }
}

TEST_CASE("restrict_form reproduces the pencil discriminants") {
    SUBCASE("plane case I, symbolic") {
        const SymbolicGram g(gram3({{3, 2, 0}, {2, 4, 1}, {0, 1, 0}}), IntPolynomial{0, 2});
        const auto f = restrict_form(g);
        CHECK(f.a == IntPolynomial{8});
        CHECK(f.b == IntPolynomial{6});
        CHECK(f.c == IntPolynomial{0, 6});
    }
    SUBCASE("plane case II, symbolic") {
        const SymbolicGram g(gram3({{3, 2, 1}, {2, 4, 1}, {1, 1, 0}}), IntPolynomial{1, 2});
        const auto f = restrict_form(g);
        CHECK(f.a == IntPolynomial{8});
        CHECK(f.b == IntPolynomial{2});
        CHECK(f.c == IntPolynomial{2, 6});
    }
    SUBCASE("dp6 with b=2, c=1: derived c-coefficient is 6k-4, not 5k-4") {
        const SymbolicGram g(gram3({{3, 6, 2}, {6, 18, 1}, {2, 1, 0}}), IntPolynomial{0, 2});
        const auto f = restrict_form(g);
        CHECK(f.a == IntPolynomial{18});
        CHECK(f.b == IntPolynomial{-18});
        CHECK(f.c == IntPolynomial{-4, 6});
        CHECK(f.c != IntPolynomial{-4, 5});
    }
    SUBCASE("rejects wrong rank or corner") {
        CHECK_THROWS_AS(restrict_form(hassett::k8()), std::invalid_argument);
        CHECK_THROWS_AS(restrict_form(gram3({{4, 2, 0}, {2, 4, 1}, {0, 1, 2}})),
                        std::invalid_argument);
    }
}

TEST_CASE("eval_form examples") {
    CHECK(hassett::eval_form({8, 6, 6}, -2, 1) == 26);  // case I at k=1
    CHECK(hassett::eval_form({8, 6, 6}, 0, 0) == 0);
    CHECK(hassett::eval_form({8, 2, 8}, 3, 1) == 86);   // case II at k=1
}

TEST_CASE("restriction form agrees with the 2x2 discriminant directly") {
    std::mt19937_64 rng(0x2b2b2b);
    for (int trial = 0; trial < 40; ++trial) {
        auto rows = random_symmetric3(rng, true);
        const GramMatrix g = gram3(rows);
        const QuadraticForm f = restrict_form(g);
        for (Int x = -10; x <= 10; ++x) {
            for (Int y = -10; y <= 10; ++y) {
                // v = x e2 + y e3, paired directly off the Gram data
                const Int e1v = rows[0][1] * x + rows[0][2] * y;
                const Int vv = rows[1][1] * x * x + 2 * rows[1][2] * x * y + rows[2][2] * y * y;
                const GramMatrix pencil({{3, e1v}, {e1v, vv}}, {"H2", "V"});
                CHECK(hassett::eval_form(f, x, y) == hassett::discriminant(pencil));
            }
        }
    }
}

TEST_CASE("symbolic discriminant matches numeric substitution") {
    const SymbolicGram g(gram3({{3, 2, 0}, {2, 4, 1}, {0, 1, 0}}), IntPolynomial{0, 2});
    const IntPolynomial disc = discriminant_symbolic(g);
    CHECK(disc == IntPolynomial{-3, 16});
    for (Int k = -100; k <= 100; ++k) {
        CHECK(disc(k) == hassett::discriminant(g.at_k(k)));
    }
}

TEST_CASE("SymbolicGram rejects polynomials off the Sigma^2 slot") {
    const IntPolynomial two_k{0, 2};
    std::vector<std::vector<IntPolynomial>> entries = {
        {IntPolynomial{3}, two_k, IntPolynomial{0}},
        {two_k, IntPolynomial{4}, IntPolynomial{1}},
        {IntPolynomial{0}, IntPolynomial{1}, two_k}};
    CHECK_THROWS_AS(SymbolicGram(entries, {"e1", "e2", "e3"}), std::invalid_argument);
}

TEST_CASE("gram parsing and formatting") {
    const GramMatrix g = hassett::parse_gram("3,2;2,4");
    CHECK(g.rows() == hassett::k8().rows());
    CHECK(hassett::format_gram(g) == "3,2;2,4");
    CHECK(hassett::parse_gram(" 3 , 6 ; 6 , 18 ").rows() == hassett::k18().rows());
    CHECK(hassett::parse_gram("3,2,0;2,4,1;0,1,-28").rank() == 3);

    CHECK_THROWS_AS(hassett::parse_gram("3,2;9,4"), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(hassett::parse_gram("3,2;2"), std::invalid_argument);    // ragged
    CHECK_THROWS_AS(hassett::parse_gram("a,b;c,d"), std::invalid_argument);
    CHECK_THROWS_AS(hassett::parse_gram(""), std::invalid_argument);
    CHECK_THROWS_AS(hassett::parse_gram("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"),
                    std::invalid_argument);
}
