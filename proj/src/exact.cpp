#include "hassett/exact.hpp"

#include <sstream>

namespace hassett {

IntPolynomial::IntPolynomial(Int c) {
    if (c != 0) coefficients_.push_back(std::move(c));
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> low_to_high)
    : coefficients_(low_to_high) {
    trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> low_to_high)
    : coefficients_(std::move(low_to_high)) {
    trim();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coefficients_.push_back(std::move(c));
    return p;
}

Int IntPolynomial::coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Int(0);
}

Int IntPolynomial::operator()(const Int& k) const {
    Int acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * k + *it;
    }
    return acc;
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size()) {
        coefficients_.resize(rhs.coefficients_.size(), Int(0));
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] += rhs.coefficients_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size()) {
        coefficients_.resize(rhs.coefficients_.size(), Int(0));
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] -= rhs.coefficients_[i];
    }
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial out;
    out.coefficients_.assign(a.coefficients_.size() + b.coefficients_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    out.trim();
    return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPolynomial operator-(const IntPolynomial& a) {
    IntPolynomial out = a;
    for (auto& c : out.coefficients_) c = -c;
    return out;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial acc;
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * q + IntPolynomial::constant(*it);
    }
    return acc;
}

Int Factorization::product() const {
    Int out = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e; ++i) out *= p;
    }
    return out;
}

Factorization factorize(const Int& n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    Factorization out;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= rest; p += 2) strip(p);
    if (rest > 1) out.factors.emplace_back(rest, 1u);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return false;
    }
    return true;
}

std::optional<Int> integer_sqrt_exact(const Int& n) {
    if (n < 0) throw std::invalid_argument("integer_sqrt_exact: n must be >= 0");
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace hassett
