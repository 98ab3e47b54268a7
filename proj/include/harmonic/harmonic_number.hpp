#pragma once

#include "harmonic/rational.hpp"

#include <cstdint>

namespace harmonic {

/// Exact n-th harmonic number H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
/// Balanced divide-and-conquer summation keeps the intermediate operands
/// near-minimal, so this stays practical up to n around 10^6.
Rational harmonic_number(std::uint64_t n);

/// Exact partial sum 1/(x+a) + 1/(x+a+1) + ... + 1/(x+b) for integer offsets
/// a <= b against a rational base point x (used by the shifted digamma
/// evaluations; x = 0 reproduces harmonic segments).
Rational reciprocal_shift_sum(const Rational& x, std::uint64_t a, std::uint64_t b);

/// Same but with squared denominators: sum of 1/(x+j)^2 for j in [a, b].
Rational reciprocal_square_shift_sum(const Rational& x, std::uint64_t a, std::uint64_t b);

}  // namespace harmonic
