#pragma once

#include "harmonic/enclosure.hpp"
#include "harmonic/precision.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Enclosure of ln 2 at the requested precision, via 2*atanh(1/3) with an
/// exact rational tail bound. Cached per precision; thread safe.
Enclosure ln2_enclosure(long bits);

/// Enclosure of ln x for rational x > 0: argument reduction x = 2^e * t with
/// t^2 in [1/2, 2), then the atanh series in z = (t-1)/(t+1). Throws
/// std::domain_error for x <= 0.
Enclosure ln_enclosure(const Rational& x, const PrecisionConfig& cfg);

/// Enclosure of Euler's constant via Euler-Maclaurin summation at N = 2^j:
/// gamma = H_N - j ln 2 - 1/(2N) + sum B_{2k}/(2k N^{2k}) + remainder, with
/// the remainder certified by the enveloping property of the alternating
/// tail (same sign as, and smaller than, the first omitted term). N and the
/// truncation order grow with the requested precision. Cached; thread safe.
Enclosure euler_gamma(const PrecisionConfig& cfg);

}  // namespace harmonic
