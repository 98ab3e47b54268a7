#include "harmonic/formulas.hpp"

#include "harmonic/coefficients.hpp"
#include "harmonic/constants.hpp"
#include "harmonic/harmonic_number.hpp"

#include <stdexcept>

namespace harmonic {

namespace {

Rational rat_n(std::uint64_t n) { return Rational(static_cast<unsigned long long>(n)); }

Rational triangular(std::uint64_t n) {
    return rat_n(n) * rat_n(n + 1) / Rational(2);
}

Rational half_integer(std::uint64_t n) {  // n + 1/2
    return rat_n(n) + Rational(1, 2);
}

Enclosure formula_enclosure(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg) {
    const Enclosure g = euler_gamma(cfg);
    switch (id.kind) {
        case FormulaKind::Euler1:
            return ln_enclosure(rat_n(n), cfg) + g.add((Rational(2) * rat_n(n)).reciprocal());
        case FormulaKind::TothMare2:
            return ln_enclosure(rat_n(n), cfg) +
                   g.add((Rational(2) * rat_n(n) + Rational(1, 3)).reciprocal());
        case FormulaKind::RamanujanLodge3: {
            const Rational nn1 = rat_n(n) * rat_n(n + 1);
            return ln_enclosure(nn1, cfg).mul(Rational(1, 2)) +
                   g.add((Rational(6) * nn1 + Rational(6, 5)).reciprocal());
        }
        case FormulaKind::DeTempleWang4: {
            const Rational h = half_integer(n);
            return ln_enclosure(h, cfg) +
                   g.add((Rational(24) * h * h + Rational(21, 5)).reciprocal());
        }
        case FormulaKind::Cesaro:
            return ln_enclosure(Rational(2) * triangular(n), cfg).mul(Rational(1, 2)) + g;
        case FormulaKind::LodgeL1: {
            const Rational m = triangular(n);
            return ln_enclosure(Rational(2) * m, cfg).mul(Rational(1, 2)) +
                   g.add((Rational(12) * m + Rational(6, 5)).reciprocal());
        }
        case FormulaKind::RamanujanSeries: {
            if (id.order == 0) throw std::invalid_argument("series order must be >= 1");
            const Rational m = triangular(n);
            Rational tail;
            Rational mp(1);
            for (unsigned p = 1; p <= id.order; ++p) {
                mp *= m;
                tail += ramanujan_coefficient(p) / mp;
            }
            return ln_enclosure(Rational(2) * m, cfg).mul(Rational(1, 2)) + g.add(tail);
        }
        case FormulaKind::DWSeries: {
            if (id.order == 0) throw std::invalid_argument("series order must be >= 1");
            const Rational h2 = half_integer(n) * half_integer(n);
            Rational tail;
            Rational hp(1);
            for (unsigned p = 1; p <= id.order; ++p) {
                hp *= h2;
                tail += detemple_wang_coefficient(p) / hp;
            }
            return ln_enclosure(half_integer(n), cfg) + g.add(tail);
        }
    }
    throw std::logic_error("unhandled formula kind");
}

}  // namespace

FormulaId FormulaId::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
    unsigned order = 0;
    if (colon != std::string::npos) {
        try {
            const long v = std::stol(text.substr(colon + 1));
            if (v < 1) throw std::invalid_argument("order");
            order = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad series order in formula id: '" + text + "'");
        }
    }
    if (head == "euler1") return {FormulaKind::Euler1, 0};
    if (head == "tothmare2") return {FormulaKind::TothMare2, 0};
    if (head == "ramanujanlodge3") return {FormulaKind::RamanujanLodge3, 0};
    if (head == "detemplewang4") return {FormulaKind::DeTempleWang4, 0};
    if (head == "cesaro") return {FormulaKind::Cesaro, 0};
    if (head == "lodge") return {FormulaKind::LodgeL1, 0};
    if (head == "ramanujan") return {FormulaKind::RamanujanSeries, order ? order : 1};
    if (head == "dw") return {FormulaKind::DWSeries, order ? order : 1};
    throw std::invalid_argument("unknown formula id: '" + text + "'");
}

std::string FormulaId::name() const {
    switch (kind) {
        case FormulaKind::Euler1: return "euler1";
        case FormulaKind::TothMare2: return "tothmare2";
        case FormulaKind::RamanujanLodge3: return "ramanujanlodge3";
        case FormulaKind::DeTempleWang4: return "detemplewang4";
        case FormulaKind::Cesaro: return "cesaro";
        case FormulaKind::LodgeL1: return "lodge";
        case FormulaKind::RamanujanSeries: return "ramanujan:" + std::to_string(order);
        case FormulaKind::DWSeries: return "dw:" + std::to_string(order);
    }
    return "?";
}

std::string error_sign_name(ErrorSign s) {
    switch (s) {
        case ErrorSign::Over: return "over";
        case ErrorSign::Under: return "under";
        case ErrorSign::Undetermined: return "undetermined";
    }
    return "?";
}

EvalReport eval_formula(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("eval_formula expects n >= 1");
    EvalReport rep;
    rep.n = n;
    rep.formula = id;
    rep.truth = harmonic_number(n);
    for (int step = 0;; ++step) {
        const PrecisionConfig c = cfg.refined(step);
        rep.approx = formula_enclosure(id, n, c);
        rep.error = rep.approx.sub(rep.truth);
        if (rep.error.is_positive()) {
            rep.sign = ErrorSign::Over;
            break;
        }
        if (rep.error.is_negative()) {
            rep.sign = ErrorSign::Under;
            break;
        }
        if (step >= cfg.max_refinements) {
            rep.sign = ErrorSign::Undetermined;
            break;
        }
    }
    return rep;
}

Enclosure theta_r(std::uint64_t n, unsigned r, const PrecisionConfig& cfg) {
    cfg.validate();
    if (n == 0 || r == 0) throw std::invalid_argument("theta_r expects n >= 1 and r >= 1");
    const Rational m = triangular(n);

    // The residual H_n - (1/2)ln(2m) - gamma - sum R_p/m^p is of the order of
    // R_{r+1}/m^{r+1}; raise the working precision so that many leading bits
    // can cancel and a meaningful enclosure is still left over.
    PrecisionConfig work = cfg;
    work.bits = cfg.bits + (static_cast<long>(r) + 1) * m.ceil_log2_abs() + 32;

    Rational exact_part = harmonic_number(n);
    Rational mp(1);
    for (unsigned p = 1; p <= r; ++p) {
        mp *= m;
        exact_part -= ramanujan_coefficient(p) / mp;
    }
    const Enclosure residual =
        Enclosure::from_rational(exact_part, static_cast<mpfr_prec_t>(work.bits + 32)) -
        ln_enclosure(Rational(2) * m, work).mul(Rational(1, 2)) - euler_gamma(work);
    return residual.mul(m.pow(static_cast<long>(r) + 1)).div(ramanujan_coefficient(r + 1));
}

Rational leading_error_estimate(const FormulaId& id, std::uint64_t n) {
    switch (id.kind) {
        case FormulaKind::Euler1:
            return (Rational(12) * rat_n(n).pow(2)).reciprocal();
        case FormulaKind::TothMare2:
            return (Rational(72) * rat_n(n).pow(3)).reciprocal();
        case FormulaKind::RamanujanLodge3:
            return Rational(19) / (Rational(3150) * (rat_n(n) * rat_n(n + 1)).pow(3));
        case FormulaKind::DeTempleWang4:
            return Rational(2071) / (Rational(806400) * half_integer(n).pow(6));
        default:
            throw std::invalid_argument("no tabulated error estimate for " + id.name());
    }
}

Enclosure asymptotic_error_ratio(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg) {
    const EvalReport rep = eval_formula(id, n, cfg);
    return rep.error.abs().div(leading_error_estimate(id, n));
}

}  // namespace harmonic
