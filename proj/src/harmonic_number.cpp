#include "harmonic/harmonic_number.hpp"

namespace harmonic {

namespace {

Rational harmonic_range(std::uint64_t a, std::uint64_t b) {
    if (a == b) return Rational(1) / Rational(static_cast<unsigned long long>(a));
    const std::uint64_t mid = a + (b - a) / 2;
    return harmonic_range(a, mid) + harmonic_range(mid + 1, b);
}

template <typename Term>
Rational balanced_sum(std::uint64_t a, std::uint64_t b, Term term) {
    if (a == b) return term(a);
    const std::uint64_t mid = a + (b - a) / 2;
    return balanced_sum(a, mid, term) + balanced_sum(mid + 1, b, term);
}

}  // namespace

Rational harmonic_number(std::uint64_t n) {
    if (n == 0) return Rational();
    return harmonic_range(1, n);
}

Rational reciprocal_shift_sum(const Rational& x, std::uint64_t a, std::uint64_t b) {
    if (a > b) return Rational();
    return balanced_sum(a, b, [&x](std::uint64_t j) {
        return (x + Rational(static_cast<unsigned long long>(j))).reciprocal();
    });
}

Rational reciprocal_square_shift_sum(const Rational& x, std::uint64_t a, std::uint64_t b) {
    if (a > b) return Rational();
    return balanced_sum(a, b, [&x](std::uint64_t j) {
        const Rational d = x + Rational(static_cast<unsigned long long>(j));
        return (d * d).reciprocal();
    });
}

}  // namespace harmonic
