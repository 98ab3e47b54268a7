#pragma once

#include "harmonic/rational.hpp"

#include <utility>
#include <vector>

namespace harmonic {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i is the x^i coefficient; trailing zeros are trimmed, and the
/// zero polynomial has an empty coefficient vector (degree() == -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coeffs);

    static Polynomial constant(Rational c);
    /// c * x^e
    static Polynomial monomial(Rational c, unsigned e);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(unsigned i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Synthetic division of p by the linear factor (x - root):
/// returns (q, r) with p(x) = q(x) * (x - root) + r, so r = p(root).
std::pair<Polynomial, Rational> poly_divmod_linear(const Polynomial& p, const Rational& root);

}  // namespace harmonic
