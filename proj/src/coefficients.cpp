#include "harmonic/coefficients.hpp"

#include "harmonic/bernoulli.hpp"
#include "harmonic/polynomial.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace harmonic {

namespace {

std::mutex coeff_mutex;
std::vector<Rational> ramanujan_cache;      // [p-1] = R_p
std::vector<Rational> detemple_wang_cache;  // [p-1] = D_p

Rational ramanujan_closed_form(unsigned p) {
    Rational sum(1);
    for (unsigned k = 1; k <= p; ++k) {
        sum += Rational::binomial(p, k) * Rational(-4).pow(k) * bernoulli_at_half(2 * k);
    }
    const Rational front = Rational(p % 2 == 1 ? 1 : -1) /
                           (Rational(2) * Rational(static_cast<long>(p)) * Rational(8).pow(p));
    return front * sum;
}

}  // namespace

Rational ramanujan_coefficient(unsigned p) {
    if (p == 0) throw std::domain_error("ramanujan_coefficient expects p >= 1");
    std::lock_guard<std::mutex> lock(coeff_mutex);
    while (ramanujan_cache.size() < p) {
        ramanujan_cache.push_back(ramanujan_closed_form(static_cast<unsigned>(ramanujan_cache.size()) + 1));
    }
    return ramanujan_cache[p - 1];
}

Rational ramanujan_coefficient_umbral(unsigned p) {
    if (p == 0) throw std::domain_error("ramanujan_coefficient_umbral expects p >= 1");
    // (4t - 1)^p with t standing for B^2; afterwards t^j becomes B_{2j}(1/2).
    const Polynomial base({Rational(-1), Rational(4)});
    Polynomial power = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < p; ++i) power = power * base;
    Rational acc;
    for (int j = 0; j <= power.degree(); ++j) {
        acc += power.coeff(static_cast<unsigned>(j)) * bernoulli_at_half(2 * static_cast<unsigned>(j));
    }
    return -acc / (Rational(2) * Rational(static_cast<long>(p)) * Rational(8).pow(p));
}

Rational detemple_wang_coefficient(unsigned p) {
    if (p == 0) throw std::domain_error("detemple_wang_coefficient expects p >= 1");
    std::lock_guard<std::mutex> lock(coeff_mutex);
    while (detemple_wang_cache.size() < p) {
        const unsigned q = static_cast<unsigned>(detemple_wang_cache.size()) + 1;
        detemple_wang_cache.push_back(-bernoulli_at_half(2 * q) /
                                      (Rational(2) * Rational(static_cast<long>(q))));
    }
    return detemple_wang_cache[p - 1];
}

Rational ramanujan_from_dw_transform(unsigned p) {
    if (p == 0) throw std::domain_error("ramanujan_from_dw_transform expects p >= 1");
    // Logarithm correction: the 1/m^p coefficient of (1/2) ln(1 + 1/(8m)).
    Rational acc = Rational(p % 2 == 1 ? 1 : -1) /
                   (Rational(2) * Rational(static_cast<long>(p)) * Rational(8).pow(p));
    // Re-expansion of D_s (2m + 1/4)^{-s} = (D_s / 2^s) m^{-s} (1 + 1/(8m))^{-s}
    // contributes D_s/2^s * C(p-1, p-s) (-1)^{p-s} / 8^{p-s} to the 1/m^p term.
    for (unsigned s = 1; s <= p; ++s) {
        Rational term = detemple_wang_coefficient(s) / Rational::pow2(static_cast<long>(s));
        term *= Rational((p - s) % 2 == 0 ? 1 : -1);
        term *= Rational::binomial(p - 1, p - s);
        term /= Rational(8).pow(static_cast<long>(p - s));
        acc += term;
    }
    return acc;
}

EulerTerm euler_term(unsigned k) {
    if (k == 0) throw std::domain_error("euler_term expects k >= 1");
    if (k == 1) return {1, Rational(1, 2)};
    const unsigned j = k - 1;
    return {2 * j, -bernoulli_number(2 * j) / Rational(2 * static_cast<long>(j))};
}

CoefficientSeries coefficient_series(CoefficientFamily family, unsigned count) {
    CoefficientSeries s;
    s.family = family;
    s.entries.reserve(count);
    for (unsigned k = 1; k <= count; ++k) {
        switch (family) {
            case CoefficientFamily::Ramanujan:
                s.entries.push_back({k, ramanujan_coefficient(k)});
                break;
            case CoefficientFamily::DeTempleWang:
                s.entries.push_back({k, detemple_wang_coefficient(k)});
                break;
            case CoefficientFamily::Euler: {
                EulerTerm t = euler_term(k);
                s.entries.push_back({t.exponent, std::move(t.value)});
                break;
            }
        }
    }
    return s;
}

std::string family_name(CoefficientFamily family) {
    switch (family) {
        case CoefficientFamily::Ramanujan: return "ramanujan";
        case CoefficientFamily::DeTempleWang: return "dw";
        case CoefficientFamily::Euler: return "euler";
    }
    return "?";
}

std::string to_csv(const CoefficientSeries& s) {
    std::ostringstream os;
    os << "index,numerator,denominator\n";
    for (const auto& e : s.entries) {
        os << e.index << "," << e.value.numerator_str() << "," << e.value.denominator_str() << "\n";
    }
    return os.str();
}

std::string to_json(const CoefficientSeries& s) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& e : s.entries) {
        if (!first) os << ",";
        os << "{\"p\":" << e.index << ",\"value\":\"" << e.value.str() << "\"}";
        first = false;
    }
    os << "]\n";
    return os.str();
}

std::string to_markdown(const CoefficientSeries& s) {
    std::ostringstream os;
    os << "| index | coefficient |\n|---|---|\n";
    for (const auto& e : s.entries) {
        os << "| " << e.index << " | " << e.value.str() << " |\n";
    }
    return os.str();
}

}  // namespace harmonic
