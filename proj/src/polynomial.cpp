#include "harmonic/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace harmonic {

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Rational c) {
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(Rational c, unsigned e) {
    std::vector<Rational> v(e + 1);
    v[e] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(unsigned i) const {
    static const Rational zero;
    if (i >= c_.size()) return zero;
    return c_[i];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] += o.c_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] -= o.c_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Polynomial, Rational> poly_divmod_linear(const Polynomial& p, const Rational& root) {
    if (p.is_zero()) return {Polynomial(), Rational()};
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry;
    for (std::size_t i = c.size(); i-- > 0;) {
        carry *= root;
        carry += c[i];
        if (i > 0) q[i - 1] = carry;
    }
    return {Polynomial(std::move(q)), std::move(carry)};
}

}  // namespace harmonic
