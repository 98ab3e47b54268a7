// Command-line front end: exact coefficient tables, certified formula
// evaluation tables, sequence scans, and the verification suites.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harmonic/coefficients.hpp"
#include "harmonic/formulas.hpp"
#include "harmonic/precision.hpp"
#include "harmonic/sequences.hpp"
#include "harmonic/verification.hpp"

namespace {

using namespace harmonic;

struct Range {
    std::uint64_t a = 1, b = 1, step = 1;
};

Range parse_range(const std::string& text) {
    Range r;
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range must look like a:b:step, got '" + text + "'");
    try {
        r.a = std::stoull(text.substr(0, c1));
        r.b = std::stoull(text.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stoull(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be three integers a:b:step, got '" + text + "'");
    }
    if (r.a < 1 || r.step < 1 || r.b < r.a)
        throw std::invalid_argument("range needs 1 <= a <= b and step >= 1, got '" + text + "'");
    if (r.b > (std::uint64_t(1) << 62))
        throw std::invalid_argument("range end too large: '" + text + "'");
    return r;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << payload;
}

// ---------------------------------------------------------------- coeffs --

int run_coeffs(const std::string& series, std::uint64_t count, const std::string& format,
               const std::string& out_path) {
    CoefficientFamily family;
    if (series == "ramanujan") family = CoefficientFamily::Ramanujan;
    else if (series == "dw") family = CoefficientFamily::DeTempleWang;
    else if (series == "euler") family = CoefficientFamily::Euler;
    else {
        std::cerr << "unknown coefficient series '" << series
                  << "' (expected ramanujan, dw, or euler)\n";
        return 2;
    }
    if (count < 1) {
        std::cerr << "count must be >= 1\n";
        return 2;
    }
    const CoefficientSeries s = coefficient_series(family, static_cast<unsigned>(count));
    std::string payload;
    if (format == "csv") payload = to_csv(s);
    else if (format == "json") payload = to_json(s);
    else payload = to_markdown(s);
    emit(payload, out_path);
    return 0;
}

// ----------------------------------------------------------------- table --

struct TableRow {
    std::uint64_t n = 0;
    std::string formula, approx_lo, approx_hi, truth_num, truth_den, error_lo, error_hi, sign,
        ratio_lo, ratio_hi;
};

TableRow make_row(const FormulaId& id, std::uint64_t n, const PrecisionConfig& cfg) {
    TableRow row;
    const EvalReport ev = eval_formula(id, n, cfg);
    row.n = n;
    row.formula = id.name();
    const auto ab = ev.approx.decimal_bounds();
    row.approx_lo = ab.first;
    row.approx_hi = ab.second;
    row.truth_num = ev.truth.numerator_str();
    row.truth_den = ev.truth.denominator_str();
    const auto eb = ev.error.decimal_bounds();
    row.error_lo = eb.first;
    row.error_hi = eb.second;
    row.sign = error_sign_name(ev.sign);
    try {
        const Enclosure ratio = asymptotic_error_ratio(id, n, cfg);
        const auto rb = ratio.decimal_bounds();
        row.ratio_lo = rb.first;
        row.ratio_hi = rb.second;
    } catch (const std::invalid_argument&) {
        // No tabulated leading error estimate for this formula; leave blank.
    }
    return row;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,formula,approx_lo,approx_hi,truth_num,truth_den,error_lo,error_hi,sign,ratio_lo,"
          "ratio_hi\n";
    for (const auto& r : rows) {
        os << r.n << "," << r.formula << "," << r.approx_lo << "," << r.approx_hi << ","
           << r.truth_num << "," << r.truth_den << "," << r.error_lo << "," << r.error_hi << ","
           << r.sign << "," << r.ratio_lo << "," << r.ratio_hi << "\n";
    }
    return os.str();
}

std::string table_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "| n | formula | approx lo | approx hi | truth | error lo | error hi | sign | ratio lo "
          "| ratio hi |\n";
    os << "|---|---------|-----------|-----------|-------|----------|----------|------|----------"
          "|----------|\n";
    for (const auto& r : rows) {
        const std::string truth =
            r.truth_den == "1" ? r.truth_num : r.truth_num + "/" + r.truth_den;
        os << "| " << r.n << " | " << r.formula << " | " << r.approx_lo << " | " << r.approx_hi
           << " | " << truth << " | " << r.error_lo << " | " << r.error_hi << " | " << r.sign
           << " | " << (r.ratio_lo.empty() ? "-" : r.ratio_lo) << " | "
           << (r.ratio_hi.empty() ? "-" : r.ratio_hi) << " |\n";
    }
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first) os << ",";
        first = false;
        os << "{\"n\":" << r.n << ",\"formula\":\"" << json_escape(r.formula) << "\""
           << ",\"approx_lo\":\"" << r.approx_lo << "\",\"approx_hi\":\"" << r.approx_hi << "\""
           << ",\"truth\":\"" << r.truth_num << "/" << r.truth_den << "\""
           << ",\"error_lo\":\"" << r.error_lo << "\",\"error_hi\":\"" << r.error_hi << "\""
           << ",\"sign\":\"" << r.sign << "\"";
        if (!r.ratio_lo.empty())
            os << ",\"ratio_lo\":\"" << r.ratio_lo << "\",\"ratio_hi\":\"" << r.ratio_hi << "\"";
        os << "}";
    }
    os << "]\n";
    return os.str();
}

int run_table(const std::string& formulas_text, const std::string& range_text,
              const PrecisionConfig& cfg, const std::string& format,
              const std::string& out_path) {
    const auto names = split_list(formulas_text);
    if (names.empty()) {
        std::cerr << "no formulas requested\n";
        return 2;
    }
    std::vector<FormulaId> ids;
    for (const auto& name : names) ids.push_back(FormulaId::parse(name));
    const Range range = parse_range(range_text);

    std::vector<TableRow> rows;
    for (std::uint64_t n = range.a; n <= range.b; n += range.step)
        for (const auto& id : ids) rows.push_back(make_row(id, n, cfg));

    std::string payload;
    if (format == "csv") payload = table_csv(rows);
    else if (format == "json") payload = table_json(rows);
    else payload = table_markdown(rows);
    emit(payload, out_path);
    return 0;
}

// ------------------------------------------------------------- sequences --

struct SeqRow {
    std::uint64_t n = 0;
    std::string sequence, lo, hi;
    bool width_ok = true;
    std::string limit, dist_lo, dist_hi;  // present only under --limit
};

std::string sequences_csv(const std::vector<SeqRow>& rows, bool with_limit) {
    std::ostringstream os;
    os << "n,sequence,lo,hi,width_ok";
    if (with_limit) os << ",limit,dist_lo,dist_hi";
    os << "\n";
    for (const auto& r : rows) {
        os << r.n << "," << r.sequence << "," << r.lo << "," << r.hi << ","
           << (r.width_ok ? "true" : "false");
        if (with_limit) os << "," << r.limit << "," << r.dist_lo << "," << r.dist_hi;
        os << "\n";
    }
    return os.str();
}

std::string sequences_markdown(const std::vector<SeqRow>& rows, bool with_limit) {
    std::ostringstream os;
    os << "| n | sequence | lo | hi | width ok |";
    if (with_limit) os << " limit | distance lo | distance hi |";
    os << "\n|---|----------|----|----|----------|";
    if (with_limit) os << "-------|-------------|-------------|";
    os << "\n";
    for (const auto& r : rows) {
        os << "| " << r.n << " | " << r.sequence << " | " << r.lo << " | " << r.hi << " | "
           << (r.width_ok ? "yes" : "no") << " |";
        if (with_limit)
            os << " " << (r.limit.empty() ? "-" : r.limit) << " | "
               << (r.dist_lo.empty() ? "-" : r.dist_lo) << " | "
               << (r.dist_hi.empty() ? "-" : r.dist_hi) << " |";
        os << "\n";
    }
    return os.str();
}

std::string sequences_json(const std::vector<SeqRow>& rows, bool with_limit) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first) os << ",";
        first = false;
        os << "{\"n\":" << r.n << ",\"sequence\":\"" << json_escape(r.sequence) << "\""
           << ",\"lo\":\"" << r.lo << "\",\"hi\":\"" << r.hi << "\""
           << ",\"width_ok\":" << (r.width_ok ? "true" : "false");
        if (with_limit && !r.limit.empty())
            os << ",\"limit\":\"" << r.limit << "\",\"dist_lo\":\"" << r.dist_lo
               << "\",\"dist_hi\":\"" << r.dist_hi << "\"";
        os << "}";
    }
    os << "]\n";
    return os.str();
}

int run_sequences(const std::string& which_text, const std::string& range_text,
                  const PrecisionConfig& cfg, const std::string& format,
                  const std::string& out_path, bool with_limit) {
    const SequenceId id = SequenceId::parse(which_text);
    const Range range = parse_range(range_text);

    Rational limit;
    const bool has_limit = sequence_limit(id, limit);

    std::vector<SeqRow> rows;
    for (std::uint64_t n = range.a; n <= range.b; n += range.step) {
        const SequencePoint pt = sequence_value(id, n, cfg);
        SeqRow row;
        row.n = n;
        row.sequence = id.name();
        const auto vb = pt.value.decimal_bounds();
        row.lo = vb.first;
        row.hi = vb.second;
        row.width_ok = pt.width_ok;
        if (with_limit && has_limit) {
            row.limit = limit.str();
            const auto db = pt.value.sub(limit).abs().decimal_bounds();
            row.dist_lo = db.first;
            row.dist_hi = db.second;
        }
        rows.push_back(std::move(row));
    }

    std::string payload;
    if (format == "csv") payload = sequences_csv(rows, with_limit);
    else if (format == "json") payload = sequences_json(rows, with_limit);
    else payload = sequences_markdown(rows, with_limit);
    emit(payload, out_path);
    return 0;
}

// ---------------------------------------------------------------- verify --

std::string verify_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "suite,label,status,witness\n";
    auto csv_quote = [](const std::string& s) {
        std::string out = "\"";
        for (const char ch : s) {
            if (ch == '"') out += "\"\"";
            else out += ch;
        }
        out += "\"";
        return out;
    };
    for (const auto& rep : reports)
        for (const auto& c : rep.checks)
            os << rep.suite << "," << csv_quote(c.label) << "," << check_status_name(c.status)
               << "," << csv_quote(c.witness) << "\n";
    return os.str();
}

int run_verify(const std::string& suites_text, std::uint64_t n_max, const PrecisionConfig& cfg,
               const std::string& format, const std::string& out_path) {
    std::vector<std::string> names = split_list(suites_text);
    if (names.empty()) {
        std::cerr << "no suites requested\n";
        return 2;
    }
    if (names.size() == 1 && names[0] == "all") names = suite_names();
    for (const auto& name : names) {
        const auto known = suite_names();
        bool ok = false;
        for (const auto& k : known) ok = ok || k == name;
        if (!ok) {
            std::cerr << "unknown verification suite '" << name << "'\n";
            return 2;
        }
    }

    std::vector<VerificationReport> reports;
    for (const auto& name : names)
        for (auto& rep : run_suite(name, n_max, cfg)) reports.push_back(std::move(rep));

    std::size_t refuted = 0, undetermined = 0;
    for (const auto& rep : reports) {
        refuted += rep.count(CheckStatus::Refuted);
        undetermined += rep.count(CheckStatus::Undetermined);
    }
    const std::string overall =
        refuted ? "refuted" : (undetermined ? "undetermined" : "proved");

    std::string payload;
    if (format == "json") {
        std::ostringstream os;
        os << "{\"reports\":[";
        bool first = true;
        for (const auto& rep : reports) {
            if (!first) os << ",";
            first = false;
            os << to_json(rep);
        }
        os << "],\"overall\":\"" << overall << "\"}\n";
        payload = os.str();
    } else if (format == "csv") {
        payload = verify_csv(reports);
    } else {
        std::ostringstream os;
        for (const auto& rep : reports) os << to_text(rep);
        os << "overall: " << overall << "\n";
        payload = os.str();
    }
    emit(payload, out_path);
    return overall == "proved" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified evaluation of harmonic-number approximation formulas"};
    app.require_subcommand(1);

    long precision = 128;
    int max_refine = 8;
    std::string format = "md";
    std::string out_path;
    std::uint64_t n_max = 10000;
    bool with_limit = false;

    app.add_option("--precision", precision, "working precision in bits (>= 32)")
        ->capture_default_str();
    app.add_option("--max-refine", max_refine, "precision-doubling refinements allowed")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--n-max", n_max, "scan bound for the verification suites")
        ->capture_default_str();
    app.add_flag("--limit", with_limit, "append limit and distance columns (sequences)");
    app.set_config("--config", "", "flat key=value config file; flags override it");

    std::string series, which, formulas_text, suites_text, range_text;
    std::uint64_t count = 1;

    CLI::App* coeffs = app.add_subcommand("coeffs", "print exact series coefficients");
    coeffs->add_option("series", series, "ramanujan, dw, or euler")->required();
    coeffs->add_option("count", count, "how many coefficients")->required();
    coeffs->fallthrough();

    CLI::App* table = app.add_subcommand("table", "evaluate approximation formulas over a range");
    table->add_option("formulas", formulas_text,
                      "comma list: euler1, tothmare2, ramanujanlodge3, detemplewang4, cesaro, "
                      "lodge, ramanujan:<r>, dw:<r>")
        ->required();
    table->add_option("range", range_text, "inclusive range a:b:step")->required();
    table->fallthrough();

    CLI::App* verify = app.add_subcommand("verify", "run machine-verification suites");
    verify->add_option("suites", suites_text, "comma list of suite names, or 'all'")->required();
    verify->fallthrough();

    CLI::App* sequences = app.add_subcommand("sequences", "tabulate a correction sequence");
    sequences->add_option("which", which, "f, lambda, lambda2, d, c, residual, rho, delta, "
                                          "deltacap, or theta:<r>")
        ->required();
    sequences->add_option("range", range_text, "inclusive range a:b:step")->required();
    sequences->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        PrecisionConfig cfg;
        cfg.bits = precision;
        cfg.max_refinements = max_refine;
        cfg.validate();

        if (coeffs->parsed()) return run_coeffs(series, count, format, out_path);
        if (table->parsed()) return run_table(formulas_text, range_text, cfg, format, out_path);
        if (verify->parsed()) return run_verify(suites_text, n_max, cfg, format, out_path);
        if (sequences->parsed())
            return run_sequences(which, range_text, cfg, format, out_path, with_limit);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
