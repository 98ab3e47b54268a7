#include "harmonic/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace harmonic {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // bernoulli_cache[k] = B_k
}  // namespace

Rational bernoulli_number(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rational(1));
    while (bernoulli_cache.size() <= k) {
        const unsigned i = static_cast<unsigned>(bernoulli_cache.size());
        // sum_{j=0}^{i-1} C(i+1, j) B_j = -(i+1) B_i
        Rational acc;
        for (unsigned j = 0; j < i; ++j) {
            if (j > 2 && (j % 2) == 1) continue;  // odd B_j vanish past B_1
            acc += Rational::binomial(i + 1, j) * bernoulli_cache[j];
        }
        bernoulli_cache.push_back(-acc / Rational(static_cast<long>(i) + 1));
    }
    return bernoulli_cache[k];
}

Rational bernoulli_at_half(unsigned k) {
    if (k == 0) return Rational(1);
    if (k % 2 != 0) throw std::domain_error("bernoulli_at_half expects even index");
    return (Rational::pow2(1 - static_cast<long>(k)) - Rational(1)) * bernoulli_number(k);
}

}  // namespace harmonic
