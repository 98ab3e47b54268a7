#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/precision.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/sequences.hpp"

namespace harmonic {

/// Outcome of a single machine check.
///
/// `Proved` means the statement was established rigorously: either by exact
/// rational/polynomial arithmetic, or by interval enclosures that strictly
/// separate the compared quantities.  `Refuted` means the arithmetic
/// establishes the *negation* rigorously.  `Undetermined` means the enclosures
/// still overlap after the configured number of precision refinements; it is
/// reported honestly rather than being rounded up to a pass.
enum class CheckStatus { Proved, Refuted, Undetermined };

const char* check_status_name(CheckStatus s);

struct Check {
    std::string label;
    CheckStatus status = CheckStatus::Undetermined;
    /// Populated for refuted/undetermined checks (and occasionally as an
    /// informational note on proved ones): the offending input and the
    /// enclosure bounds that failed to separate.
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_proved() const;
    std::size_t count(CheckStatus s) const;
};

/// Render a report as one line per check ("[proved] label" etc.) followed by a
/// summary line.  Deterministic: depends only on the report contents.
std::string to_text(const VerificationReport& report);

/// Render a report as JSON: {"suite":...,"checks":[{"label":...,"status":...},...]}.
/// The "witness" key is present only when the witness string is non-empty.
std::string to_json(const VerificationReport& report);

/// H_{2^k} > (k+1)/2 for k = 2..k_max, by exact rational arithmetic.
VerificationReport verify_oresme(unsigned k_max = 20);

/// Sample points used by the digamma/trigamma bracket suites.
std::vector<Rational> default_bracket_samples();

/// Two-sided polynomial brackets for 2*psi(x+1) - ln(x(x+1)) and for
/// 1/x + 1/(x+1) - 2*psi'(x+1), checked at the given positive sample points.
/// Chain endpoints are exact rationals; the middle quantity is a certified
/// enclosure, refined until it separates strictly from both endpoints.
VerificationReport verify_digamma_brackets(const std::vector<Rational>& samples,
                                           const PrecisionConfig& cfg);

/// Two-sided polynomial brackets for 1/(x+1/2) - psi'(x+1) and for
/// psi(x+1) - ln(x+1/2), same method.
VerificationReport verify_shifted_log_brackets(const std::vector<Rational>& samples,
                                               const PrecisionConfig& cfg);

/// Exact Laurent-algebra replay of the rational-function identity behind the
/// monotonicity of the lambda sequence: bracket combination equals a quintic
/// over 33075 x^12, and the quintic factors through x = 28 with a positive
/// remainder.
VerificationReport verify_identity_lambda();

/// Same for the d sequence: bracket combination times 17340825600 x^16 (1+2x)
/// equals a degree-10 polynomial, which factors through x = 4 with a positive
/// remainder.
VerificationReport verify_identity_d();

/// Coefficient goldens and cross-derivations: the first nine Ramanujan
/// coefficients against frozen exact values, the first three of the
/// DeTemple-Wang family, agreement of the three independent Ramanujan
/// derivations up to p = 20, and sign alternation up to p = 40.
VerificationReport verify_coefficient_tables();

/// Strict monotonicity of one of the correction-term sequences (f decreasing,
/// lambda increasing, d increasing) for n = 1..n_max via certified comparison
/// of adjacent terms, refining both members of a pair until they separate.
VerificationReport verify_monotone(SequenceKind which, std::uint64_t n_max,
                                   const PrecisionConfig& cfg);

/// The three sharp two-sided bounds (the 1/(2n+...) form for H_n - ln n -
/// gamma, the Lodge form, and the DeTemple-Wang form): strict inequalities for
/// n >= 2 against the sharp constants, plus symbolic equality at n = 1.
VerificationReport verify_sharp_theorems(std::uint64_t n_max,
                                         const PrecisionConfig& cfg);

/// Theta_r strictly inside (0,1) on the grid n in {1..100} x r in {1..10},
/// plus n = 1000 for the same r range.
VerificationReport verify_theta_grid(const PrecisionConfig& cfg);

/// c_n = 12m (H_n - ln sqrt(2m)... ) lies strictly in (0,1) for n = 1..n_max.
VerificationReport verify_cesaro(std::uint64_t n_max, const PrecisionConfig& cfg);

/// Quantitative remainder bounds for the Lodge approximation: the residual
/// after the 6/5 correction, its second-order refinement rho, the scaled
/// third-order gap delta with its uniform bound, and the gap 6/5 - lambda_n
/// against 38/(175 n(n+1)).
VerificationReport verify_lodge_bounds(std::uint64_t n_max,
                                       const PrecisionConfig& cfg);

/// Names accepted by run_suite: "oresme", "lemmas", "identities",
/// "coefficients", "monotone", "sharp", "theta", "cesaro", "lodge".
std::vector<std::string> suite_names();

/// Run one named suite with default sizes (monotone/sharp/cesaro/lodge scan
/// n_max, oresme uses k_max = 20).  Unknown names throw std::invalid_argument.
/// A suite name may expand to several reports (e.g. "lemmas" runs both bracket
/// families; "monotone" runs all three sequences).
std::vector<VerificationReport> run_suite(const std::string& name,
                                          std::uint64_t n_max,
                                          const PrecisionConfig& cfg);

}  // namespace harmonic
