#pragma once

#include "harmonic/rational.hpp"

#include <string>
#include <vector>

namespace harmonic {

/// R_p: coefficient of 1/m^p in the expansion of H_n around half the log of
/// twice the triangular number m = n(n+1)/2, computed from the closed form
///   R_p = ((-1)^(p-1) / (2p 8^p)) * (1 + sum_{k=1..p} C(p,k) (-4)^k B_{2k}(1/2)).
/// Memoized; thread safe.
Rational ramanujan_coefficient(unsigned p);

/// Same coefficient by the symbolic (umbral) route: expand ((4B^2 - 1)/8)^p
/// binomially as a polynomial in B^2, replace each power B^{2j} by the
/// Bernoulli polynomial value B_{2j}(1/2), and scale by -1/(2p).
Rational ramanujan_coefficient_umbral(unsigned p);

/// D_p = -B_{2p}(1/2) / (2p): coefficient of 1/(n+1/2)^{2p} in the expansion
/// of H_n around ln(n + 1/2). Throws std::domain_error for p = 0.
Rational detemple_wang_coefficient(unsigned p);

/// R_p recovered from the D_s family: re-expand each D_s/(n+1/2)^{2s} in
/// powers of 1/m via (n+1/2)^2 = 2m + 1/4 and add the logarithm correction
/// term (-1)^(p-1)/(2p 8^p). Must agree exactly with ramanujan_coefficient.
Rational ramanujan_from_dw_transform(unsigned p);

/// One term of the classical expansion
///   H_n ~ ln n + gamma + 1/(2n) - sum_{j>=1} B_{2j}/(2j n^{2j}),
/// encoded as (exponent of 1/n, coefficient): k=1 gives (1, 1/2) and
/// k = j+1 gives (2j, -B_{2j}/(2j)).
struct EulerTerm {
    unsigned exponent;
    Rational value;
};
EulerTerm euler_term(unsigned k);

enum class CoefficientFamily { Ramanujan, DeTempleWang, Euler };

/// Family table row: `index` is the power that labels the term in its family
/// (p for Ramanujan and DeTemple-Wang, the exponent of 1/n for Euler).
struct CoefficientEntry {
    unsigned index;
    Rational value;
};

struct CoefficientSeries {
    CoefficientFamily family;
    std::vector<CoefficientEntry> entries;
};

/// First `count` terms of the chosen family, in display order.
CoefficientSeries coefficient_series(CoefficientFamily family, unsigned count);

std::string family_name(CoefficientFamily family);

/// CSV with header "index,numerator,denominator".
std::string to_csv(const CoefficientSeries& s);
/// JSON array of {"p": index, "value": "num/den"}.
std::string to_json(const CoefficientSeries& s);
/// Markdown table.
std::string to_markdown(const CoefficientSeries& s);

}  // namespace harmonic
