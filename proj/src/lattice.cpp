#include "hassett/lattice.hpp"

#include <array>
#include <set>
#include <sstream>

namespace hassett {

namespace {

// Types with ring semantics (+, -, *): Int and IntPolynomial.
template <class Ring>
Ring det_upto3(const std::vector<std::vector<Ring>>& m) {
    switch (m.size()) {
        case 1:
            return m[0][0];
        case 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        case 3:
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        default:
            throw std::invalid_argument("determinant: rank must be 1..3");
    }
}

template <class Ring>
void check_shape(const std::vector<std::vector<Ring>>& entries,
                 const std::vector<std::string>& labels) {
    const std::size_t r = entries.size();
    if (r < 1 || r > 3) throw std::invalid_argument("GramMatrix: rank must be 1..3");
    for (const auto& row : entries) {
        if (row.size() != r) throw std::invalid_argument("GramMatrix: matrix must be square");
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (!(entries[i][j] == entries[j][i])) {
                throw std::invalid_argument("GramMatrix: matrix must be symmetric");
            }
        }
    }
    if (labels.size() != r) throw std::invalid_argument("GramMatrix: need one label per basis vector");
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != r) throw std::invalid_argument("GramMatrix: basis labels must be distinct");
}

// d(x,y) coefficients from the 2x2 discriminant identity
// disc<u,v> = (u.u)(v.v) - (u.v)^2 with u = e1 and v = x*e2 + y*e3.
template <class Ring, class Matrix>
std::array<Ring, 3> restrict_coeffs(const Matrix& g) {
    if (g.rank() != 3) throw std::invalid_argument("restrict_form: requires rank 3");
    if (!(g.at(0, 0) == Ring(3))) {
        throw std::invalid_argument("restrict_form: first basis vector must square to 3");
    }
    Ring a = Ring(3) * g.at(1, 1) - g.at(0, 1) * g.at(0, 1);
    Ring b = Ring(6) * g.at(1, 2) - Ring(2) * g.at(0, 1) * g.at(0, 2);
    Ring c = Ring(3) * g.at(2, 2) - g.at(0, 2) * g.at(0, 2);
    return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace

GramMatrix::GramMatrix(std::vector<std::vector<Int>> entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
    check_shape(entries_, labels_);
}

GramMatrix k8() {
    return GramMatrix({{3, 2}, {2, 4}}, {"H2", "Q"});
}

GramMatrix k18() {
    return GramMatrix({{3, 6}, {6, 18}}, {"H2", "S"});
}

Int discriminant(const GramMatrix& g) {
    return det_upto3(g.rows());
}

SymbolicGram::SymbolicGram(const GramMatrix& base, IntPolynomial sigma_squared) {
    const int r = base.rank();
    entries_.assign(static_cast<std::size_t>(r), {});
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            entries_[static_cast<std::size_t>(i)].push_back(IntPolynomial::constant(base.at(i, j)));
        }
    }
    entries_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)] = std::move(sigma_squared);
    labels_ = base.basis_labels();
}

SymbolicGram::SymbolicGram(std::vector<std::vector<IntPolynomial>> entries,
                           std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
    check_shape(entries_, labels_);
    const std::size_t r = entries_.size();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == r - 1 && j == r - 1) continue;
            if (!entries_[i][j].is_constant()) {
                throw std::invalid_argument(
                    "SymbolicGram: polynomial entries allowed only in the last diagonal slot");
            }
        }
    }
}

GramMatrix SymbolicGram::at_k(const Int& k) const {
    std::vector<std::vector<Int>> rows;
    rows.reserve(entries_.size());
    for (const auto& row : entries_) {
        std::vector<Int> out;
        out.reserve(row.size());
        for (const auto& e : row) out.push_back(e(k));
        rows.push_back(std::move(out));
    }
    return GramMatrix(std::move(rows), labels_);
}

IntPolynomial discriminant_symbolic(const SymbolicGram& g) {
    std::vector<std::vector<IntPolynomial>> m;
    m.reserve(static_cast<std::size_t>(g.rank()));
    for (int i = 0; i < g.rank(); ++i) {
        std::vector<IntPolynomial> row;
        for (int j = 0; j < g.rank(); ++j) row.push_back(g.at(i, j));
        m.push_back(std::move(row));
    }
    return det_upto3(m);
}

QuadraticForm restrict_form(const GramMatrix& g) {
    auto [a, b, c] = restrict_coeffs<Int>(g);
    return {std::move(a), std::move(b), std::move(c)};
}

PolyQuadraticForm restrict_form(const SymbolicGram& g) {
    auto [a, b, c] = restrict_coeffs<IntPolynomial>(g);
    return {std::move(a), std::move(b), std::move(c)};
}

Int eval_form(const QuadraticForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

IntPolynomial eval_form(const PolyQuadraticForm& f, const IntPolynomial& x,
                        const IntPolynomial& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

GramMatrix parse_gram(std::string_view text) {
    std::vector<std::vector<Int>> rows;
    std::string buf(text);
    std::istringstream row_stream(buf);
    std::string row_text;
    while (std::getline(row_stream, row_text, ';')) {
        std::vector<Int> row;
        std::istringstream entry_stream(row_text);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) {
            const auto first = entry.find_first_not_of(" \t");
            const auto last = entry.find_last_not_of(" \t");
            if (first == std::string::npos) throw std::invalid_argument("parse_gram: empty entry");
            try {
                row.emplace_back(entry.substr(first, last - first + 1));
            } catch (const std::runtime_error&) {
                throw std::invalid_argument("parse_gram: entry is not an integer: " + entry);
            }
        }
        if (row.empty()) throw std::invalid_argument("parse_gram: empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("parse_gram: empty matrix");
    static const std::vector<std::string> kDefault = {"e1", "e2", "e3"};
    if (rows.size() > kDefault.size()) throw std::invalid_argument("GramMatrix: rank must be 1..3");
    std::vector<std::string> labels(kDefault.begin(), kDefault.begin() + static_cast<long>(rows.size()));
    return GramMatrix(std::move(rows), std::move(labels));
}

std::string format_gram(const GramMatrix& g) {
    std::ostringstream os;
    for (int i = 0; i < g.rank(); ++i) {
        if (i) os << ";";
        for (int j = 0; j < g.rank(); ++j) {
            if (j) os << ",";
            os << g.at(i, j).str();
        }
    }
    return os.str();
}

}  // namespace hassett
