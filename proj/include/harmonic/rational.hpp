#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace harmonic {

/// Arbitrary-precision rational, always held in canonical form
/// (lowest terms, positive denominator). Thin RAII wrapper over GMP's mpq_t.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rational(long long n) { mpq_init(q_); set_ll(n, 1); }
    Rational(unsigned long long n) { mpq_init(q_); set_ull(n); }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    /// Parses "num", "-num", or "num/den". Throws std::invalid_argument on
    /// malformed input or zero denominator.
    explicit Rational(const std::string& text);

    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational reciprocal() const;

    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long e) const;

    /// 2^e for any integer e.
    static Rational pow2(long e);

    /// Exact binomial coefficient C(n, k).
    static Rational binomial(unsigned long n, unsigned long k);

    std::string numerator_str() const;
    std::string denominator_str() const;

    /// Canonical text form: "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    /// Decimal digits of the numerator (rough size measure, used by width planning).
    std::size_t digit_size() const {
        return mpz_sizeinbase(mpq_numref(q_), 10) + mpz_sizeinbase(mpq_denref(q_), 10);
    }

    /// ceil(log2(|x|)) for nonzero x: the smallest s with |x| <= 2^s.
    long ceil_log2_abs() const;

    const __mpq_struct* raw() const { return q_; }
    __mpq_struct* raw() { return q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void set_ll(long long num, long long den);
    void set_ull(unsigned long long n);

    mpq_t q_;
};

}  // namespace harmonic
