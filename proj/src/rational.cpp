#include "harmonic/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace harmonic {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational::Rational(const std::string& text) {
    mpq_init(q_);
    if (text.empty() || mpq_set_str(q_, text.c_str(), 10) != 0) {
        throw std::invalid_argument("unparsable rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    }
    mpq_canonicalize(q_);
}

void Rational::set_ll(long long num, long long den) {
    mpz_set_si(mpq_numref(q_), static_cast<long>(num));
    mpz_set_si(mpq_denref(q_), static_cast<long>(den));
    mpq_canonicalize(q_);
}

void Rational::set_ull(unsigned long long n) {
    mpz_set_ui(mpq_numref(q_), static_cast<unsigned long>(n));
    mpz_set_ui(mpq_denref(q_), 1);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("zero raised to a negative power");
        return Rational();
    }
    Rational r;
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), ue);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), ue);
    if (e < 0) mpq_inv(r.q_, r.q_);
    return r;
}

Rational Rational::pow2(long e) {
    Rational r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.q_, r.q_, static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.q_, r.q_, static_cast<unsigned long>(-e));
    }
    return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    if (k > n) return r;
    mpz_bin_uiui(mpq_numref(r.q_), n, k);
    return r;
}

long Rational::ceil_log2_abs() const {
    if (is_zero()) throw std::domain_error("log2 of zero");
    // bit lengths give floor(log2)+1 of each part; adjust by exact comparison
    const long nb = static_cast<long>(mpz_sizeinbase(mpq_numref(q_), 2));
    const long db = static_cast<long>(mpz_sizeinbase(mpq_denref(q_), 2));
    long s = nb - db + 1;
    Rational a = abs();
    while (pow2(s - 1) >= a) --s;
    while (pow2(s) < a) ++s;
    return s;
}

std::string Rational::numerator_str() const {
    char* s = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::string Rational::denominator_str() const {
    char* s = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace harmonic
