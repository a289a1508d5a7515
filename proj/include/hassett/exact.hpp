#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hassett {

// All arithmetic in this library is exact. Int is arbitrary precision;
// overflow of a fixed-width type anywhere would be a correctness bug.
using Int = boost::multiprecision::cpp_int;

// Floor residue in [0, m) for m > 0. C++ % truncates toward zero.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Univariate integer-coefficient polynomial in one formal parameter
// (written "k" throughout). Canonical encoding: coefficients_[i] is the
// coefficient of k^i, the zero polynomial is the empty list, and the
// leading coefficient is never zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(Int c);  // constant polynomial
    IntPolynomial(std::initializer_list<Int> low_to_high);
    explicit IntPolynomial(std::vector<Int> low_to_high);

    static IntPolynomial constant(Int c);

    bool is_zero() const { return coefficients_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coefficients_; }
    // Coefficient of k^i, zero beyond the degree.
    Int coefficient(std::size_t i) const;
    bool is_constant() const { return coefficients_.size() <= 1; }

    // Exact evaluation at an integer point (Horner).
    Int operator()(const Int& k) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);

    // Coefficient-wise identity on the canonical encoding. This is the
    // authoritative identity check; it is stronger than agreement on any
    // finite set of evaluation points.
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // Human-readable form, highest degree first, e.g. "72k^2 - 60k + 14".
    std::string str(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Int> coefficients_;
};

// p(q(k)), computed exactly by Horner over the polynomial ring.
IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q);

// Prime factorization with factors sorted ascending by prime.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;
    Int product() const;
};

// Deterministic trial division up to sqrt(n). Intended for desk-scale
// inputs (discriminants up to ~10^6); cost grows as sqrt(n) beyond that.
Factorization factorize(const Int& n);  // requires n >= 2

// Deterministic primality by trial division; same scale caveat as factorize.
bool is_prime(const Int& n);

// floor(sqrt(n)) tested exactly: r when r*r == n, nullopt otherwise.
std::optional<Int> integer_sqrt_exact(const Int& n);  // requires n >= 0

}  // namespace hassett
