#pragma once

#include "harmonic/bigfloat.hpp"
#include "harmonic/rational.hpp"

#include <string>
#include <utility>

namespace harmonic {

/// Certified interval [lo, hi]: both endpoints share one mpfr precision, lo is
/// always rounded toward -inf and hi toward +inf, so the mathematically exact
/// target provably lies inside. All arithmetic rounds outward; predicates are
/// conservative (they answer "provably yes" / "not provably").
class Enclosure {
public:
    /// NaN endpoints; assign before use.
    explicit Enclosure(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}
    Enclosure(BigFloat lo, BigFloat hi);

    /// Tightest interval around an exact rational at the given precision.
    static Enclosure from_rational(const Rational& q, mpfr_prec_t prec);
    /// Outward-rounded interval [a, b] from exact rational endpoints (a <= b).
    static Enclosure from_rational_bounds(const Rational& a, const Rational& b, mpfr_prec_t prec);

    mpfr_prec_t bits() const { return lo_.precision(); }
    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    /// Exact rational views of the endpoints.
    Rational lo_rational() const { return lo_.to_rational(); }
    Rational hi_rational() const { return hi_.to_rational(); }
    /// Exact width hi - lo.
    Rational width() const { return hi_rational() - lo_rational(); }

    // --- conservative predicates -------------------------------------------
    bool contains(const Rational& q) const { return lo_.cmp(q) <= 0 && hi_.cmp(q) >= 0; }
    bool contains(const Enclosure& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    /// Provably negative / positive (strict).
    bool is_negative() const { return hi_.sign() < 0; }
    bool is_positive() const { return lo_.sign() > 0; }
    /// Every point of the interval is strictly below / above q.
    bool strictly_below(const Rational& q) const { return hi_.cmp(q) < 0; }
    bool strictly_above(const Rational& q) const { return lo_.cmp(q) > 0; }
    /// Strict containment in the open interval (a, b).
    bool strictly_inside(const Rational& a, const Rational& b) const {
        return lo_.cmp(a) > 0 && hi_.cmp(b) < 0;
    }
    /// Provably this < other (intervals disjoint in order).
    bool provably_less(const Enclosure& other) const { return hi_ < other.lo_; }

    // --- arithmetic, all outward -------------------------------------------
    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    /// Division: b must be provably nonzero.
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    Enclosure operator-() const;

    Enclosure add(const Rational& q) const;
    Enclosure sub(const Rational& q) const;      ///< this - q
    Enclosure rsub(const Rational& q) const;     ///< q - this
    Enclosure mul(const Rational& q) const;
    Enclosure div(const Rational& q) const;      ///< q must be nonzero
    Enclosure reciprocal() const;                ///< interval must be provably nonzero
    Enclosure abs() const;
    /// Convex hull with the origin (extends the interval to include 0).
    Enclosure hull_with_zero() const;

    /// Outward re-rounding to a different precision.
    Enclosure at_precision(mpfr_prec_t prec) const;

    /// Decimal endpoint pair with just enough digits to tell lo from hi,
    /// plus two guard digits; lo rounded down, hi rounded up.
    std::pair<std::string, std::string> decimal_bounds() const;
    /// {"lo": "...", "hi": "...", "bits": N}
    std::string json() const;

private:
    BigFloat lo_;
    BigFloat hi_;
};

}  // namespace harmonic
