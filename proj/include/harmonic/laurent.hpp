#pragma once

#include "harmonic/polynomial.hpp"
#include "harmonic/rational.hpp"

#include <map>

namespace harmonic {

/// Sparse Laurent polynomial: finite sum of c_k * x^k with integer exponents
/// of either sign.  Used to replay algebraic identities that mix positive and
/// negative powers without leaving exact arithmetic.
class Laurent {
public:
    Laurent() = default;

    static Laurent monomial(Rational c, long e);
    static Laurent from_polynomial(const Polynomial& p);

    bool is_zero() const { return t_.empty(); }
    long min_exponent() const;  ///< throws std::domain_error if zero
    long max_exponent() const;  ///< throws std::domain_error if zero
    Rational coeff(long e) const;
    const std::map<long, Rational>& terms() const { return t_; }

    /// True when no negative exponents are present (the zero Laurent counts).
    bool is_polynomial() const;
    /// Valid only when is_polynomial().
    Polynomial to_polynomial() const;

    /// Multiply by x^k (shift every exponent by k).
    Laurent shifted(long k) const;

    Rational eval(const Rational& x) const;  ///< throws std::domain_error at x = 0 if negative powers exist

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent scaled(const Rational& s) const;
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    void insert_add(long e, const Rational& c);
    std::map<long, Rational> t_;
};

}  // namespace harmonic
