#pragma once

#include <optional>
#include <vector>

#include "hassett/exact.hpp"

namespace hassett {

// A solution of the generalized Pell equation x^2 - D*y^2 = N with x, y > 0.
struct PellSolution {
    Int x, y, D, N;
    bool valid() const { return x >= 1 && y >= 1 && x * x - D * y * y == N; }
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// Witness (a, n) of condition (***): a^2 * d = 2n^2 + 2n + 2.
struct TripleStarWitness {
    Int a, n;
    friend bool operator==(const TripleStarWitness&, const TripleStarWitness&) = default;
};

// Simple continued fraction of sqrt(D) for non-square D > 0:
// sqrt(D) = [a0; period, period, ...], the period returned exactly once.
struct ContinuedFraction {
    Int a0;
    std::vector<Int> period;
};
ContinuedFraction cf_sqrt(const Int& D);

// x^2 - D*y^2 = N, decided exactly in two regimes:
//  - non-square D with |N| < sqrt(D): every solution is primitive here
//    (gcd(x,y)^2 divides N), so all solutions appear among the convergents
//    of sqrt(D); one period is scanned (two when the period length is odd)
//    and the first hit, which is the least positive solution, is returned.
//    |N| >= sqrt(D) is rejected as outside this regime.
//  - square D = r^2: finite enumeration of factor pairs of
//    (x - r*y)(x + r*y) = N; the least positive solution is returned.
struct PellOutcome {
    std::optional<PellSolution> solution;
    std::optional<long> period_length;  // absent for square D
};
PellOutcome pell_solve_detail(const Int& D, const Int& N);
std::optional<PellSolution> pell_solve(const Int& D, const Int& N);

// disc condition (*): d > 6 and d ≡ 0 or 2 (mod 6).
bool condition_star(const Int& d);

// Condition (**): d not divisible by 4, by 9, or by any odd prime ≡ 2 (mod 3).
bool condition_double_star(const Int& d);  // requires d >= 2

// Condition (***): a^2 * d = 2n^2 + 2n + 2 solvable in integers. Decided
// exactly through the substitution x = 2n + 1, y = a, which turns the
// equation into x^2 - 2d*y^2 = -3. Witnesses are normalized to n >= 0.
// Any d >= 1 is accepted; the geometric reading additionally needs (*).
struct TripleStarResult {
    bool solvable = false;
    std::optional<TripleStarWitness> witness;
    std::optional<PellSolution> pell;
    std::optional<long> period_length;  // continued-fraction period of sqrt(2d)
};
TripleStarResult condition_triple_star(const Int& d);  // requires d >= 1

// Bounded search companion to condition_triple_star: scans a in [1, a_max]
// and tests whether 2*a^2*d - 3 is an odd perfect square x^2, reporting
// n = (x-1)/2 when n <= n_max. Absence means no witness in the box, not
// unsolvability.
std::optional<TripleStarWitness> triple_star_bruteforce(const Int& d, const Int& a_max,
                                                        const Int& n_max);

// The witness <-> certificate correspondence 2*a^2*d = (2n+1)^2 + 3.
// Both directions validate their input and reject non-witnesses.
PellSolution witness_to_pell(const TripleStarWitness& w, const Int& d);
TripleStarWitness pell_to_witness(const PellSolution& s);

// Everything the `check` interface reports for one d >= 1.
struct ConditionReport {
    Int d;
    bool star = false;
    bool double_star = false;
    bool triple_star = false;
    std::optional<TripleStarWitness> witness;
    std::optional<PellSolution> pell;
    std::optional<long> period_length;
};
ConditionReport check_conditions(const Int& d);

}  // namespace hassett
