#include "harmonic/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace harmonic {

void Laurent::insert_add(long e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Laurent Laurent::monomial(Rational c, long e) {
    Laurent l;
    if (!c.is_zero()) l.t_.emplace(e, std::move(c));
    return l;
}

Laurent Laurent::from_polynomial(const Polynomial& p) {
    Laurent l;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) l.t_.emplace(static_cast<long>(i), c[i]);
    }
    return l;
}

long Laurent::min_exponent() const {
    if (t_.empty()) throw std::domain_error("min_exponent of zero Laurent polynomial");
    return t_.begin()->first;
}

long Laurent::max_exponent() const {
    if (t_.empty()) throw std::domain_error("max_exponent of zero Laurent polynomial");
    return t_.rbegin()->first;
}

Rational Laurent::coeff(long e) const {
    auto it = t_.find(e);
    if (it == t_.end()) return Rational();
    return it->second;
}

bool Laurent::is_polynomial() const {
    return t_.empty() || t_.begin()->first >= 0;
}

Polynomial Laurent::to_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative exponents");
    if (t_.empty()) return Polynomial();
    std::vector<Rational> v(static_cast<std::size_t>(t_.rbegin()->first) + 1);
    for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e)] = c;
    return Polynomial(std::move(v));
}

Laurent Laurent::shifted(long k) const {
    Laurent l;
    for (const auto& [e, c] : t_) l.t_.emplace(e + k, c);
    return l;
}

Rational Laurent::eval(const Rational& x) const {
    if (!is_polynomial() && x.is_zero()) {
        throw std::domain_error("Laurent polynomial with negative powers evaluated at zero");
    }
    Rational acc;
    for (const auto& [e, c] : t_) acc += c * x.pow(e);
    return acc;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent l = *this;
    for (const auto& [e, c] : o.t_) l.insert_add(e, c);
    return l;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent l = *this;
    for (const auto& [e, c] : o.t_) l.insert_add(e, -c);
    return l;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent l;
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            l.insert_add(e1 + e2, c1 * c2);
        }
    }
    return l;
}

Laurent Laurent::operator-() const {
    Laurent l;
    for (const auto& [e, c] : t_) l.t_.emplace(e, -c);
    return l;
}

Laurent Laurent::scaled(const Rational& s) const {
    if (s.is_zero()) return Laurent();
    Laurent l;
    for (const auto& [e, c] : t_) l.t_.emplace(e, c * s);
    return l;
}

std::string Laurent::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        if (it->first == 1) os << "*x";
        else if (it->first != 0) os << "*x^" << it->first;
        first = false;
    }
    return os.str();
}

}  // namespace harmonic
