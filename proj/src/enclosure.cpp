#include "harmonic/enclosure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace harmonic {

namespace {

mpfr_prec_t joint_precision(const Enclosure& a, const Enclosure& b) {
    return std::max(a.bits(), b.bits());
}

}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.precision() != hi_.precision()) {
        throw std::logic_error("enclosure endpoints disagree on precision");
    }
    if (lo_.is_nan() || hi_.is_nan() || !(lo_ <= hi_)) {
        throw std::logic_error("enclosure endpoints out of order");
    }
}

Enclosure Enclosure::from_rational(const Rational& q, mpfr_prec_t prec) {
    return Enclosure(BigFloat::from_rational(q, prec, MPFR_RNDD),
                     BigFloat::from_rational(q, prec, MPFR_RNDU));
}

Enclosure Enclosure::from_rational_bounds(const Rational& a, const Rational& b, mpfr_prec_t prec) {
    if (a > b) throw std::invalid_argument("interval endpoints out of order");
    return Enclosure(BigFloat::from_rational(a, prec, MPFR_RNDD),
                     BigFloat::from_rational(b, prec, MPFR_RNDU));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    const mpfr_prec_t p = joint_precision(a, b);
    Enclosure r(p);
    mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    const mpfr_prec_t p = joint_precision(a, b);
    Enclosure r(p);
    mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const mpfr_prec_t p = joint_precision(a, b);
    // Lower endpoint: least of the four products rounded down; upper: greatest
    // rounded up. Redundant work, but unconditionally correct for any signs.
    BigFloat lo(p), hi(p), t(p);
    const mpfr_srcptr as[2] = {a.lo_.raw(), a.hi_.raw()};
    const mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.raw(), as[i], bs[j], MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_mul(t.raw(), as[i], bs[j], MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero()) throw std::domain_error("division by an interval containing zero");
    const mpfr_prec_t p = joint_precision(a, b);
    BigFloat lo(p), hi(p), t(p);
    const mpfr_srcptr as[2] = {a.lo_.raw(), a.hi_.raw()};
    const mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.raw(), as[i], bs[j], MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_div(t.raw(), as[i], bs[j], MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::operator-() const {
    Enclosure r(bits());
    mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);  // exact
    mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::add(const Rational& q) const {
    Enclosure r(bits());
    mpfr_add_q(r.lo_.raw(), lo_.raw(), q.raw(), MPFR_RNDD);
    mpfr_add_q(r.hi_.raw(), hi_.raw(), q.raw(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::sub(const Rational& q) const {
    Enclosure r(bits());
    mpfr_sub_q(r.lo_.raw(), lo_.raw(), q.raw(), MPFR_RNDD);
    mpfr_sub_q(r.hi_.raw(), hi_.raw(), q.raw(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::rsub(const Rational& q) const { return -sub(q); }

Enclosure Enclosure::mul(const Rational& q) const {
    Enclosure r(bits());
    if (q.sign() >= 0) {
        mpfr_mul_q(r.lo_.raw(), lo_.raw(), q.raw(), MPFR_RNDD);
        mpfr_mul_q(r.hi_.raw(), hi_.raw(), q.raw(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_.raw(), hi_.raw(), q.raw(), MPFR_RNDD);
        mpfr_mul_q(r.hi_.raw(), lo_.raw(), q.raw(), MPFR_RNDU);
    }
    return r;
}

Enclosure Enclosure::div(const Rational& q) const {
    if (q.is_zero()) throw std::domain_error("division by zero rational");
    Enclosure r(bits());
    if (q.sign() > 0) {
        mpfr_div_q(r.lo_.raw(), lo_.raw(), q.raw(), MPFR_RNDD);
        mpfr_div_q(r.hi_.raw(), hi_.raw(), q.raw(), MPFR_RNDU);
    } else {
        mpfr_div_q(r.lo_.raw(), hi_.raw(), q.raw(), MPFR_RNDD);
        mpfr_div_q(r.hi_.raw(), lo_.raw(), q.raw(), MPFR_RNDU);
    }
    return r;
}

Enclosure Enclosure::reciprocal() const {
    if (contains_zero()) throw std::domain_error("reciprocal of an interval containing zero");
    Enclosure r(bits());
    mpfr_ui_div(r.lo_.raw(), 1, hi_.raw(), MPFR_RNDD);
    mpfr_ui_div(r.hi_.raw(), 1, lo_.raw(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    // Straddles zero: |x| ranges over [0, max(|lo|, hi)].
    Enclosure r(bits());
    mpfr_set_ui(r.lo_.raw(), 0, MPFR_RNDD);
    BigFloat neg_lo(bits());
    mpfr_neg(neg_lo.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_max(r.hi_.raw(), neg_lo.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::hull_with_zero() const {
    Enclosure r = *this;
    if (r.lo_.sign() > 0) mpfr_set_ui(r.lo_.raw(), 0, MPFR_RNDD);
    if (r.hi_.sign() < 0) mpfr_set_ui(r.hi_.raw(), 0, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::at_precision(mpfr_prec_t prec) const {
    Enclosure r(prec);
    mpfr_set(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

std::pair<std::string, std::string> Enclosure::decimal_bounds() const {
    // Print enough digits that the strings resolve the interval itself: down
    // to roughly the width's decimal scale (plus a guard), relative to the
    // value's magnitude, capped by what the precision can support.
    const int max_digits = static_cast<int>(static_cast<double>(bits()) * 0.30103) + 2;
    int digits = max_digits;
    const Rational w = width();
    if (!w.is_zero()) {
        const Rational mag = lo_rational().abs() < hi_rational().abs() ? hi_rational().abs()
                                                                       : lo_rational().abs();
        long scale = -w.ceil_log2_abs();  // width ~ 2^-scale
        if (!mag.is_zero()) scale += mag.ceil_log2_abs();
        const int wanted = static_cast<int>(static_cast<double>(scale) * 0.30103) + 2;
        digits = std::max(3, std::min(wanted, max_digits));
    }
    return {lo_.decimal(digits, MPFR_RNDD), hi_.decimal(digits, MPFR_RNDU)};
}

std::string Enclosure::json() const {
    auto [lo, hi] = decimal_bounds();
    std::ostringstream os;
    os << "{\"lo\":\"" << lo << "\",\"hi\":\"" << hi << "\",\"bits\":" << bits() << "}";
    return os.str();
}

}  // namespace harmonic
