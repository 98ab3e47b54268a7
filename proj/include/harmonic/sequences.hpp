#pragma once

#include "harmonic/enclosure.hpp"
#include "harmonic/precision.hpp"

#include <cstdint>
#include <string>

namespace harmonic {

/// The scalar sequences derived from H_n. With m = n(n+1)/2 and
/// G = H_n - gamma - (1/2)ln(2m):
///   f        = 1/(H_n - ln n - gamma) - 2n            (decreases to 1/3)
///   lambda   = 1/G - 6n(n+1)                          (increases to 6/5)
///   lambda2  = 1/G - 12m, the same numbers read off the reciprocal form
///   d        = 1/(H_n - gamma - ln(n+1/2)) - 24(n+1/2)^2  (increases to 21/5)
///   c        = 12m * G                                 (stays inside (0,1))
///   residual = G - 1/(12m + 6/5)
///   rho      = 19/(25200 m^3) - residual
///   delta    = (6/5 - 19/(175m) + 13/(250m^2) - lambda2) * m^3
///   deltacap = 6/5 - lambda
///   theta(r) = the series bracketing factor (see theta_r)
enum class SequenceKind { F, Lambda, LambdaL2, D, C, LodgeResidual, Rho, Delta, DeltaCap, Theta };

struct SequenceId {
    SequenceKind kind = SequenceKind::F;
    unsigned order = 0;  // r, Theta only

    /// "f", "lambda", "lambda2", "d", "c", "residual", "rho", "delta",
    /// "deltacap", "theta:<r>". Throws std::invalid_argument.
    static SequenceId parse(const std::string& text);
    std::string name() const;
};

struct SequencePoint {
    std::uint64_t n = 0;
    SequenceId which;
    Enclosure value;
    /// True when the final width kept at least half the requested bits;
    /// a false value flags precision exhaustion to table consumers.
    bool width_ok = true;
};

/// Certified enclosure of the sequence at n. Interior reciprocals whose
/// argument interval cannot be separated from zero trigger refinement
/// (precision doubling up to cfg.max_refinements) before giving up.
SequencePoint sequence_value(const SequenceId& id, std::uint64_t n, const PrecisionConfig& cfg);

/// One evaluation at exactly cfg.bits, reusing a precomputed exact H_n so
/// scan loops can keep a running harmonic sum.  No internal refinement:
/// std::domain_error escapes when an interior interval straddles zero, and
/// callers widen the precision themselves.
Enclosure sequence_enclosure(const SequenceId& id, std::uint64_t n,
                             const PrecisionConfig& cfg, const Rational& h_n);

/// The proven limit for f, lambda, lambda2, and d (1/3, 6/5, 6/5, 21/5).
/// Returns false for sequences without a tabulated limit constant.
bool sequence_limit(const SequenceId& id, Rational& out);

}  // namespace harmonic
