#pragma once

#include "harmonic/enclosure.hpp"
#include "harmonic/precision.hpp"
#include "harmonic/rational.hpp"

#include <cstdint>
#include <string>

namespace harmonic {

/// The closed approximation formulas for H_n, plus the two truncated series
/// families. Cesaro denotes the bare series base (1/2)ln(2m) + gamma, whose
/// error is c_n/(12m) with c_n in (0,1); LodgeL1 and RamanujanLodge3 are the
/// same function written in the two variable conventions (m vs n(n+1)).
enum class FormulaKind {
    Euler1,           // ln n + gamma + 1/(2n)
    TothMare2,        // ln n + gamma + 1/(2n + 1/3)
    RamanujanLodge3,  // ln sqrt(n(n+1)) + gamma + 1/(6n(n+1) + 6/5)
    DeTempleWang4,    // ln(n + 1/2) + gamma + 1/(24(n+1/2)^2 + 21/5)
    Cesaro,           // (1/2) ln(2m) + gamma
    LodgeL1,          // (1/2) ln(2m) + gamma + 1/(12m + 6/5)
    RamanujanSeries,  // (1/2) ln(2m) + gamma + sum_{p<=r} R_p/m^p
    DWSeries,         // ln(n + 1/2) + gamma + sum_{p<=r} D_p/(n+1/2)^{2p}
};

struct FormulaId {
    FormulaKind kind = FormulaKind::Euler1;
    unsigned order = 0;  // r, for the two series kinds only

    /// "euler1", "tothmare2", "ramanujanlodge3", "detemplewang4", "cesaro",
    /// "lodge", "ramanujan:<r>", "dw:<r>". Throws std::invalid_argument.
    static FormulaId parse(const std::string& text);
    std::string name() const;
};

enum class ErrorSign { Over, Under, Undetermined };
std::string error_sign_name(ErrorSign s);

struct EvalReport {
    std::uint64_t n = 0;
    FormulaId formula;
    Enclosure approx;
    Rational truth;    // exact H_n
    Enclosure error;   // approx - truth, outward
    ErrorSign sign = ErrorSign::Undetermined;
};

/// Certified evaluation; refines (doubling precision, up to
/// cfg.max_refinements) until the error sign separates from zero, else
/// reports Undetermined.
EvalReport eval_formula(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg);

/// Enclosure of the bracketing factor of the truncated triangular-number
/// series: Theta_r = (H_n - (1/2)ln(2m) - gamma - sum_{p<=r} R_p/m^p)
/// * m^{r+1}/R_{r+1}. The working precision is raised by about
/// (r+1)*log2(m) bits to survive the cancellation in the residual.
Enclosure theta_r(std::uint64_t n, unsigned r, const PrecisionConfig& cfg);

/// |error| divided by the formula's leading asymptotic error estimate:
/// Euler1 vs 1/(12n^2), TothMare2 vs 1/(72n^3), RamanujanLodge3 vs
/// 19/(3150 [n(n+1)]^3), DeTempleWang4 vs 2071/(806400 (n+1/2)^6).
Enclosure asymptotic_error_ratio(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg);

/// The predicted leading error magnitude used by asymptotic_error_ratio.
Rational leading_error_estimate(const FormulaId& id, std::uint64_t n);

}  // namespace harmonic
