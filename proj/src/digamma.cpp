#include "harmonic/digamma.hpp"

#include "harmonic/bernoulli.hpp"
#include "harmonic/constants.hpp"
#include "harmonic/harmonic_number.hpp"

#include <cstdint>
#include <stdexcept>

namespace harmonic {

namespace {

// Shift threshold: the asymptotic series is only applied at arguments at
// least this large, so its terms shrink fast enough to reach the tail target
// with a short sum. Grows with the requested precision.
std::uint64_t shift_threshold(long bits) {
    std::uint64_t t = 16;
    while (t * 8 < static_cast<std::uint64_t>(bits + 32)) t *= 2;
    return t;
}

std::uint64_t shift_count(const Rational& x, std::uint64_t threshold) {
    // Smallest S >= 0 with x + S + 1 >= threshold.
    const Rational deficit = Rational(static_cast<unsigned long long>(threshold)) - x - Rational(1);
    if (deficit.sign() <= 0) return 0;
    mpz_t q;
    mpz_init(q);
    mpz_cdiv_q(q, mpq_numref(deficit.raw()), mpq_denref(deficit.raw()));
    const std::uint64_t s = mpz_get_ui(q);
    mpz_clear(q);
    return s;
}

struct AsymptoticTail {
    Rational sum;      // the Bernoulli part, exact
    Rational omitted;  // first omitted term (signed); remainder = theta * omitted
};

// sum_{k=1..K} B_{2k}/(2k z^{2k}), truncated once |first omitted| <= target.
AsymptoticTail digamma_tail(const Rational& z, const Rational& target) {
    const Rational z2 = z * z;
    AsymptoticTail t;
    Rational zpow = z2;
    for (unsigned k = 1;; ++k) {
        t.sum += bernoulli_number(2 * k) / (Rational(2L * k) * zpow);
        zpow *= z2;
        t.omitted = bernoulli_number(2 * k + 2) / (Rational(2L * k + 2) * zpow);
        if (t.omitted.abs() <= target) return t;
        if (k > 2000) throw std::runtime_error("digamma series failed to reach tolerance");
    }
}

// sum_{k=1..K} B_{2k}/z^{2k+1}, same stopping rule.
AsymptoticTail trigamma_tail(const Rational& z, const Rational& target) {
    const Rational z2 = z * z;
    AsymptoticTail t;
    Rational zpow = z2 * z;
    for (unsigned k = 1;; ++k) {
        t.sum += bernoulli_number(2 * k) / zpow;
        zpow *= z2;
        t.omitted = bernoulli_number(2 * k + 2) / zpow;
        if (t.omitted.abs() <= target) return t;
        if (k > 2000) throw std::runtime_error("trigamma series failed to reach tolerance");
    }
}

}  // namespace

Enclosure digamma_enclosure(const Rational& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (x.sign() <= 0) throw std::domain_error("digamma_enclosure expects x > 0");
    const long w = cfg.bits + 32;
    const Rational target = Rational::pow2(-(cfg.bits + 16));
    const Rational pad = Rational::pow2(-(cfg.bits + 15));

    const std::uint64_t s = shift_count(x, shift_threshold(cfg.bits));
    const Rational z = x + Rational(static_cast<unsigned long long>(s) + 1);

    // psi(x+1) = psi(z) - sum_{j=1..s} 1/(x+j)
    //          = ln z - 1/(2z) - tail.sum + theta*omitted - shift_sum.
    const AsymptoticTail tail = digamma_tail(z, target);
    Rational core = -(Rational(2) * z).reciprocal() - tail.sum - reciprocal_shift_sum(x, 1, s);
    Enclosure bracket = Enclosure::from_rational_bounds(core - pad, core + pad,
                                                        static_cast<mpfr_prec_t>(w));
    return ln_enclosure(z, cfg) + bracket;
}

Enclosure trigamma_enclosure(const Rational& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (x.sign() <= 0) throw std::domain_error("trigamma_enclosure expects x > 0");
    const long w = cfg.bits + 32;
    const Rational target = Rational::pow2(-(cfg.bits + 16));
    const Rational pad = Rational::pow2(-(cfg.bits + 15));

    const std::uint64_t s = shift_count(x, shift_threshold(cfg.bits));
    const Rational z = x + Rational(static_cast<unsigned long long>(s) + 1);

    // psi'(x+1) = psi'(z) + sum_{j=1..s} 1/(x+j)^2
    //           = 1/z + 1/(2z^2) + tail.sum + theta*omitted + shift_sum.
    const AsymptoticTail tail = trigamma_tail(z, target);
    Rational core = z.reciprocal() + (Rational(2) * z * z).reciprocal() + tail.sum +
                    reciprocal_square_shift_sum(x, 1, s);
    return Enclosure::from_rational_bounds(core - pad, core + pad, static_cast<mpfr_prec_t>(w));
}

}  // namespace harmonic
