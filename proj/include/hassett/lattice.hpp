#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hassett/exact.hpp"

namespace hassett {

// Symmetric integer Gram matrix of rank 1..3 with a marked ordered basis.
// Row/column i carries the intersection numbers of the class named
// basis_labels()[i]; symmetry is enforced at construction.
class GramMatrix {
public:
    GramMatrix(std::vector<std::vector<Int>> entries, std::vector<std::string> labels);

    int rank() const { return static_cast<int>(entries_.size()); }
    const Int& at(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<Int>>& rows() const { return entries_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
        return a.entries_ == b.entries_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<Int>> entries_;
    std::vector<std::string> labels_;
};

// The rank-2 pairing of the hyperplane square with a quadric surface class,
// [[3,2],[2,4]] on basis (H2, Q).
GramMatrix k8();

// The rank-2 pairing of the hyperplane square with a sextic del Pezzo class,
// [[3,6],[6,18]] on basis (H2, S).
GramMatrix k18();

// Determinant of the Gram matrix, computed exactly.
Int discriminant(const GramMatrix& g);

// Gram matrix whose last diagonal slot (the Sigma^2 position) holds a
// polynomial in k while every other entry is an integer constant.
class SymbolicGram {
public:
    // Replaces the last diagonal entry of base with sigma_squared.
    SymbolicGram(const GramMatrix& base, IntPolynomial sigma_squared);
    // Validates that non-constant entries occur only in the last diagonal slot.
    SymbolicGram(std::vector<std::vector<IntPolynomial>> entries, std::vector<std::string> labels);

    int rank() const { return static_cast<int>(entries_.size()); }
    const IntPolynomial& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    // Substitutes an integer for k.
    GramMatrix at_k(const Int& k) const;

private:
    std::vector<std::vector<IntPolynomial>> entries_;
    std::vector<std::string> labels_;
};

// Determinant as an exact polynomial in k.
IntPolynomial discriminant_symbolic(const SymbolicGram& g);

// Binary quadratic form a*x^2 + b*xy + c*y^2 over the integers.
struct QuadraticForm {
    Int a, b, c;
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// The same form with coefficients polynomial in k.
struct PolyQuadraticForm {
    IntPolynomial a, b, c;
    QuadraticForm at_k(const Int& k) const { return {a(k), b(k), c(k)}; }
    friend bool operator==(const PolyQuadraticForm&, const PolyQuadraticForm&) = default;
};

// Restriction of the discriminant to the pencil v = x*e2 + y*e3 inside a
// rank-3 lattice whose first basis vector squares to 3:
//   d(x,y) = disc<e1, v> = (e1.e1)(v.v) - (e1.v)^2
// expanded exactly as a binary quadratic form in (x, y).
QuadraticForm restrict_form(const GramMatrix& g);
PolyQuadraticForm restrict_form(const SymbolicGram& g);

Int eval_form(const QuadraticForm& f, const Int& x, const Int& y);
// Form coefficients and arguments all polynomial in k; result polynomial in k.
IntPolynomial eval_form(const PolyQuadraticForm& f, const IntPolynomial& x, const IntPolynomial& y);

// Row-separated textual format, rows split by ';' and entries by ','
// (e.g. "3,2;2,4"). Basis labels default to e1, e2, e3.
GramMatrix parse_gram(std::string_view text);
std::string format_gram(const GramMatrix& g);

}  // namespace hassett
