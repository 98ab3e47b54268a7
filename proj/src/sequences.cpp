#include "harmonic/sequences.hpp"

#include "harmonic/constants.hpp"
#include "harmonic/formulas.hpp"
#include "harmonic/harmonic_number.hpp"

#include <stdexcept>

namespace harmonic {

namespace {

Rational rat_n(std::uint64_t n) { return Rational(static_cast<unsigned long long>(n)); }

Enclosure compute_point(const SequenceId& id, std::uint64_t n, const PrecisionConfig& cfg,
                        const Rational& h) {
    const Rational m = rat_n(n) * rat_n(n + 1) / Rational(2);

    auto base_g = [&]() {  // H_n - gamma - (1/2) ln(2m)
        return ln_enclosure(Rational(2) * m, cfg).mul(Rational(1, 2)).rsub(h) - euler_gamma(cfg);
    };

    switch (id.kind) {
        case SequenceKind::F: {
            const Enclosure g = ln_enclosure(rat_n(n), cfg).rsub(h) - euler_gamma(cfg);
            return g.reciprocal().sub(Rational(2) * rat_n(n));
        }
        case SequenceKind::Lambda:
            return base_g().reciprocal().sub(Rational(6) * rat_n(n) * rat_n(n + 1));
        case SequenceKind::LambdaL2:
            return base_g().reciprocal().sub(Rational(12) * m);
        case SequenceKind::D: {
            const Rational half = rat_n(n) + Rational(1, 2);
            const Enclosure g = ln_enclosure(half, cfg).rsub(h) - euler_gamma(cfg);
            return g.reciprocal().sub(Rational(24) * half * half);
        }
        case SequenceKind::C:
            return base_g().mul(Rational(12) * m);
        case SequenceKind::LodgeResidual:
            return base_g().sub((Rational(12) * m + Rational(6, 5)).reciprocal());
        case SequenceKind::Rho: {
            const Rational cap = Rational(19) / (Rational(25200) * m.pow(3));
            const Enclosure residual = base_g().sub((Rational(12) * m + Rational(6, 5)).reciprocal());
            return residual.rsub(cap);
        }
        case SequenceKind::Delta: {
            const Rational head =
                Rational(6, 5) - Rational(19) / (Rational(175) * m) +
                Rational(13) / (Rational(250) * m * m);
            const Enclosure lambda2 = base_g().reciprocal().sub(Rational(12) * m);
            return lambda2.rsub(head).mul(m.pow(3));
        }
        case SequenceKind::DeltaCap: {
            const Enclosure lambda = base_g().reciprocal().sub(Rational(6) * rat_n(n) * rat_n(n + 1));
            return lambda.rsub(Rational(6, 5));
        }
        case SequenceKind::Theta:
            if (id.order == 0) throw std::invalid_argument("theta sequence needs an order r >= 1");
            return theta_r(n, id.order, cfg);
    }
    throw std::logic_error("unhandled sequence kind");
}

}  // namespace

SequenceId SequenceId::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
    unsigned order = 0;
    if (colon != std::string::npos) {
        try {
            const long v = std::stol(text.substr(colon + 1));
            if (v < 1) throw std::invalid_argument("order");
            order = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad order in sequence id: '" + text + "'");
        }
    }
    if (head == "f") return {SequenceKind::F, 0};
    if (head == "lambda") return {SequenceKind::Lambda, 0};
    if (head == "lambda2") return {SequenceKind::LambdaL2, 0};
    if (head == "d") return {SequenceKind::D, 0};
    if (head == "c") return {SequenceKind::C, 0};
    if (head == "residual") return {SequenceKind::LodgeResidual, 0};
    if (head == "rho") return {SequenceKind::Rho, 0};
    if (head == "delta") return {SequenceKind::Delta, 0};
    if (head == "deltacap") return {SequenceKind::DeltaCap, 0};
    if (head == "theta") return {SequenceKind::Theta, order ? order : 1};
    throw std::invalid_argument("unknown sequence id: '" + text + "'");
}

std::string SequenceId::name() const {
    switch (kind) {
        case SequenceKind::F: return "f";
        case SequenceKind::Lambda: return "lambda";
        case SequenceKind::LambdaL2: return "lambda2";
        case SequenceKind::D: return "d";
        case SequenceKind::C: return "c";
        case SequenceKind::LodgeResidual: return "residual";
        case SequenceKind::Rho: return "rho";
        case SequenceKind::Delta: return "delta";
        case SequenceKind::DeltaCap: return "deltacap";
        case SequenceKind::Theta: return "theta:" + std::to_string(order);
    }
    return "?";
}

SequencePoint sequence_value(const SequenceId& id, std::uint64_t n, const PrecisionConfig& cfg) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("sequence_value expects n >= 1");
    SequencePoint pt;
    pt.n = n;
    pt.which = id;
    const Rational h = harmonic_number(n);
    for (int step = 0;; ++step) {
        try {
            pt.value = compute_point(id, n, cfg.refined(step), h);
            break;
        } catch (const std::domain_error&) {
            // An interior interval straddled zero (e.g. before a reciprocal);
            // retry narrower unless the refinement budget is exhausted.
            if (step >= cfg.max_refinements) throw;
        }
    }
    pt.width_ok = pt.value.width() <= Rational::pow2(-(cfg.bits / 2));
    return pt;
}

Enclosure sequence_enclosure(const SequenceId& id, std::uint64_t n, const PrecisionConfig& cfg,
                             const Rational& h_n) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("sequence_enclosure expects n >= 1");
    return compute_point(id, n, cfg, h_n);
}

bool sequence_limit(const SequenceId& id, Rational& out) {
    switch (id.kind) {
        case SequenceKind::F: out = Rational(1, 3); return true;
        case SequenceKind::Lambda:
        case SequenceKind::LambdaL2: out = Rational(6, 5); return true;
        case SequenceKind::D: out = Rational(21, 5); return true;
        default: return false;
    }
}

}  // namespace harmonic
