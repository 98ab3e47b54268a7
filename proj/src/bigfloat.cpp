#include "harmonic/bigfloat.hpp"

#include <stdexcept>

namespace harmonic {

Rational BigFloat::to_rational() const {
    if (!is_finite()) throw std::domain_error("non-finite float has no rational value");
    Rational q;
    mpfr_get_q(q.raw(), f_);
    return q;
}

std::string BigFloat::decimal(int digits, mpfr_rnd_t rnd) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*e", digits, rnd, f_) < 0 || s == nullptr) {
        throw std::runtime_error("mpfr formatting failed");
    }
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace harmonic
