#pragma once

#include "harmonic/rational.hpp"

namespace harmonic {

/// B_k in the convention with B_1 = -1/2 (so sum_{j<k} C(k+1,j) B_j = 0 for
/// k >= 1). Memoized; thread safe.
Rational bernoulli_number(unsigned k);

/// Bernoulli polynomial value B_k(1/2), via the scaling identity
/// B_k(1/2) = (2^(1-k) - 1) B_k. Only even k is meaningful for the series
/// built on top of this; odd k throws std::domain_error.
Rational bernoulli_at_half(unsigned k);

}  // namespace harmonic
