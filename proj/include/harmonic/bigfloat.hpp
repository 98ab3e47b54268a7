#pragma once

#include <cstdio>  // must precede mpfr.h for the formatted-output declarations

#include <mpfr.h>

#include "harmonic/rational.hpp"

#include <string>

namespace harmonic {

/// RAII wrapper around a single mpfr_t. Every value-changing operation takes
/// an explicit rounding mode; enclosure endpoints are built exclusively with
/// downward (lo) or upward (hi) rounding.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(f_, prec); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);  // same precision: exact
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(f_, mpfr_get_prec(o.f_));
            mpfr_set(f_, o.f_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(f_, o.f_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat x(prec);
        mpfr_set_q(x.f_, q.raw(), rnd);
        return x;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(f_); }
    bool is_nan() const { return mpfr_nan_p(f_) != 0; }
    bool is_finite() const { return mpfr_number_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(f_, o.f_); }
    int cmp(const Rational& q) const { return mpfr_cmp_q(f_, q.raw()); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.f_, b.f_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.f_, b.f_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.f_, b.f_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.f_, b.f_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.f_, b.f_) != 0; }

    double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(f_, rnd); }

    /// Exact conversion; every finite binary float is rational.
    Rational to_rational() const;

    /// Scientific-notation decimal with `digits` fractional digits, rounded in
    /// the given direction (so the printed value brackets the stored one).
    std::string decimal(int digits, mpfr_rnd_t rnd) const;

    mpfr_ptr raw() { return f_; }
    mpfr_srcptr raw() const { return f_; }

private:
    mpfr_t f_;
};

}  // namespace harmonic
