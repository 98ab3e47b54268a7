#pragma once

#include "harmonic/enclosure.hpp"
#include "harmonic/precision.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Enclosure of psi(x + 1) for rational x > 0 (so integer x = n encloses
/// H_n - gamma). Shifts upward until the argument clears a precision-dependent
/// threshold, then applies the asymptotic series
///   psi(z) = ln z - 1/(2z) - sum_{k=1..K} B_{2k}/(2k z^{2k}) + remainder,
/// whose remainder has the sign of, and is smaller than, the first omitted
/// term; the shift is paid back with an exact rational sum. Throws
/// std::domain_error for x <= 0.
Enclosure digamma_enclosure(const Rational& x, const PrecisionConfig& cfg);

/// Enclosure of psi'(x + 1) for rational x > 0, by the same shift with
///   psi'(z) = 1/z + 1/(2z^2) + sum_{k=1..K} B_{2k}/z^{2k+1} + remainder.
/// Everything except the remainder bracket is exact rational arithmetic.
Enclosure trigamma_enclosure(const Rational& x, const PrecisionConfig& cfg);

}  // namespace harmonic
