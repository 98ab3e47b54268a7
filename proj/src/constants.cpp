#include "harmonic/constants.hpp"

#include "harmonic/bernoulli.hpp"
#include "harmonic/harmonic_number.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace harmonic {

namespace {

// Requested-precision-relative margins. Series tails are truncated once their
// exact rational bound drops to `tail_target`, and the result is bracketed
// symmetrically at the twice-as-wide `pad`. The factor-of-two gap means every
// endpoint sits at distance >= tail_target from the enclosed value, which is
// what makes enclosures computed at doubled precision nest inside coarser
// ones even though the internal summation parameters change.
Rational tail_target(long bits) { return Rational::pow2(-(bits + 16)); }
Rational sym_pad(long bits) { return Rational::pow2(-(bits + 15)); }

long working_bits(long bits) { return bits + 32; }

// Partial sum of 2*atanh(z) = 2*(z + z^3/3 + z^5/5 + ...) with an exact tail
// bound: returns (S, B) such that 2*atanh(z) lies in [S - B, S + B] and
// B <= tail_target(bits). Requires z^2 < 1/8.
std::pair<Rational, Rational> two_atanh_core(const Rational& z, long bits) {
    const Rational z2 = z * z;
    if (z2 >= Rational(1, 8)) throw std::logic_error("atanh argument outside reduced range");
    Rational q = z2 < Rational(3, 100) ? Rational(3, 100) : z2;  // geometric ratio bound
    const Rational target = tail_target(bits);
    const Rational one(1);
    Rational sum;
    Rational power = z;  // z^(2k+1)
    for (unsigned long k = 0;; ++k) {
        sum += power / Rational(static_cast<long>(2 * k + 1));
        power *= z2;
        // Remaining terms are bounded by the geometric series starting at the
        // next power: |sum_{j>k} z^(2j+1)/(2j+1)| <= |z|^(2k+3) / ((2k+3)(1-q)).
        Rational bound = Rational(2) * power.abs() /
                         (Rational(static_cast<long>(2 * k + 3)) * (one - q));
        if (bound <= target) return {Rational(2) * sum, std::move(bound)};
        if (k > 100000) throw std::runtime_error("atanh series failed to converge");
    }
}

std::mutex constants_mutex;
std::map<long, Enclosure> ln2_cache;    // keyed by requested bits
std::map<long, Enclosure> gamma_cache;  // keyed by requested bits

Enclosure ln2_uncached(long bits) {
    auto [s, bound] = two_atanh_core(Rational(1, 3), bits);
    (void)bound;  // <= tail_target by construction; pad covers it
    const Rational pad = sym_pad(bits);
    return Enclosure::from_rational_bounds(s - pad, s + pad,
                                           static_cast<mpfr_prec_t>(working_bits(bits)));
}

}  // namespace

Enclosure ln2_enclosure(long bits) {
    std::lock_guard<std::mutex> lock(constants_mutex);
    auto it = ln2_cache.find(bits);
    if (it == ln2_cache.end()) it = ln2_cache.emplace(bits, ln2_uncached(bits)).first;
    return it->second;
}

Enclosure ln_enclosure(const Rational& x, const PrecisionConfig& cfg) {
    cfg.validate();
    if (x.sign() <= 0) throw std::domain_error("ln of a non-positive value");
    const long w = working_bits(cfg.bits);
    if (x == Rational(1)) return Enclosure::from_rational(Rational(0), static_cast<mpfr_prec_t>(w));

    // Reduce to x = 2^e * t with t^2 in [1/2, 2); both tests are exact.
    long e = x.ceil_log2_abs();  // 2^(e-1) < x <= 2^e
    Rational t = x * Rational::pow2(-e);
    if (Rational(2) * t * t < Rational(1)) {
        --e;
        t *= Rational(2);
    }

    const Rational z = (t - Rational(1)) / (t + Rational(1));
    Enclosure result(static_cast<mpfr_prec_t>(w));
    if (z.is_zero()) {
        result = Enclosure::from_rational(Rational(0), static_cast<mpfr_prec_t>(w));
    } else {
        auto [s, bound] = two_atanh_core(z, cfg.bits);
        (void)bound;
        const Rational pad = sym_pad(cfg.bits);
        result = Enclosure::from_rational_bounds(s - pad, s + pad, static_cast<mpfr_prec_t>(w));
    }
    if (e != 0) result = result + ln2_enclosure(cfg.bits).mul(Rational(e));
    return result;
}

Enclosure euler_gamma(const PrecisionConfig& cfg) {
    cfg.validate();
    {
        std::lock_guard<std::mutex> lock(constants_mutex);
        auto it = gamma_cache.find(cfg.bits);
        if (it != gamma_cache.end()) return it->second;
    }

    const long w = working_bits(cfg.bits);
    const Rational target = tail_target(cfg.bits);
    const Rational pad = sym_pad(cfg.bits);

    // N = 2^j large enough that the Bernoulli tail can reach the target
    // before its terms turn around and grow.
    long j = 7;
    while ((1024L << (j - 7)) < cfg.bits + 32) ++j;

    for (;; ++j) {
        if (j > 24) throw std::runtime_error("gamma summation parameters out of range");
        const std::uint64_t n = std::uint64_t(1) << j;
        const Rational n2 = Rational(static_cast<unsigned long long>(n)) *
                            Rational(static_cast<unsigned long long>(n));

        Rational tail_sum;                    // sum_{k=1..K} B_{2k}/(2k N^{2k})
        Rational npow = n2;                   // N^{2k} at the current k
        Rational prev_abs;                    // |first omitted| from previous k
        bool have_prev = false;
        for (unsigned k = 1; k <= 4000; ++k) {
            tail_sum += bernoulli_number(2 * k) / (Rational(2L * k) * npow);
            npow *= n2;
            const Rational omitted =
                bernoulli_number(2 * k + 2) / (Rational(2L * k + 2) * npow);
            const Rational omitted_abs = omitted.abs();
            if (omitted_abs <= target) {
                // gamma = core - j ln 2 + theta * omitted, theta in (0,1).
                const Rational core = harmonic_number(n) -
                                      Rational(1) / Rational(2LL * static_cast<long long>(n)) +
                                      tail_sum;
                Enclosure enc = Enclosure::from_rational_bounds(core - pad, core + pad,
                                                                static_cast<mpfr_prec_t>(w));
                enc = enc - ln2_enclosure(cfg.bits).mul(Rational(j));
                std::lock_guard<std::mutex> lock(constants_mutex);
                auto it = gamma_cache.find(cfg.bits);
                if (it == gamma_cache.end()) it = gamma_cache.emplace(cfg.bits, enc).first;
                return it->second;
            }
            if (have_prev && omitted_abs > prev_abs) break;  // divergence point passed; need larger N
            prev_abs = omitted_abs;
            have_prev = true;
        }
    }
}

}  // namespace harmonic
