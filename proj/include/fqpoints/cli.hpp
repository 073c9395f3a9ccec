#pragma once

// Command-line driver. run() parses argv, dispatches to the library and
// returns 0 on success, 1 when a computed check fails, 2 on usage or input
// errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "congruence.hpp"
#include "counting.hpp"
#include "formal_group.hpp"
#include "io.hpp"
#include "survey.hpp"
#include "zeta.hpp"

namespace fqpoints::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the directory for relative --out paths.
inline constexpr const char* kOutDirEnv = "FQPOINTS_OUT_DIR";

enum class Format { table, json, csv };

struct CommonOptions {
    Format format = Format::table;
    std::string out;
    unsigned threads = 1;
    std::uint64_t bound = kDefaultFieldBound;
};

/// "3", "1..4" or "1,2,5".
inline std::vector<unsigned> parse_k_range(const std::string& text) {
    std::vector<unsigned> ks;
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long v = std::stol(s, &used);
            if (used != s.size() || v < 1) throw std::invalid_argument(s);
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw invalid_input("bad extension degree '" + s + "' in k range '" + text + "'");
        }
    };
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const unsigned lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
        for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) ks.push_back(number(item));
    }
    if (ks.empty()) throw invalid_input("empty k range '" + text + "'");
    return ks;
}

inline CoeffSpec parse_coeff(const std::string& s) {
    try {
        if (s.rfind("g^", 0) == 0) return GenPow{std::stoll(s.substr(2))};
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
        throw invalid_input("bad coefficient '" + s + "' (expected an integer or g^k)");
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

/// "d=4,coeffs=1,1,1,1"
inline DiagonalForm parse_diagonal(const std::string& text) {
    const auto pos = text.find("coeffs=");
    if (text.rfind("d=", 0) != 0 || pos == std::string::npos)
        throw invalid_input("diagonal spec must look like d=4,coeffs=1,1,1,1");
    DiagonalForm f;
    try {
        f.d = static_cast<unsigned>(std::stoul(text.substr(2, pos - 2)));
    } catch (const std::exception&) {
        throw invalid_input("bad degree in diagonal spec '" + text + "'");
    }
    for (const auto& c : split(text.substr(pos + 7), ',')) f.coeffs.push_back(parse_coeff(c));
    f.validate();
    return f;
}

inline std::vector<Integer> parse_counts(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& c : split(text, ',')) out.push_back(parse_integer(c));
    if (out.empty()) throw invalid_input("no counts given");
    return out;
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
inline std::string read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw invalid_input("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline HeightSpec parse_height(const std::string& s) {
    if (s == "inf" || s == "infinite" || s == "infinity") return HeightSpec::infinite();
    unsigned long h = 0;
    try {
        std::size_t used = 0;
        h = std::stoul(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw invalid_input("height must be a positive integer or 'inf', got '" + s + "'");
    }
    if (h == 0) throw invalid_input("height must be at least 1");
    return h == 1 ? HeightSpec::one() : HeightSpec::finite(static_cast<unsigned>(h));
}

class Output {
   public:
    Output(std::ostream& out, const CommonOptions& opts) : out_(out), opts_(opts) {}

    void emit(const std::string& text) {
        out_ << text;
        if (!text.empty() && text.back() != '\n') out_ << '\n';
        if (opts_.out.empty()) return;
        std::filesystem::path path(opts_.out);
        if (path.is_relative())
            if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
        std::ofstream f(path);
        if (!f) throw invalid_input("cannot write '" + path.string() + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }

    void emit(const json& j) { emit(j.dump(2)); }

    Format format() const { return opts_.format; }

   private:
    std::ostream& out_;
    const CommonOptions& opts_;
};

struct CountArgs {
    std::string diagonal, variety, k = "1", oracle = "auto";
    unsigned ngon = 0;
    std::vector<unsigned> chain;
    std::uint64_t p = 0;
    unsigned e = 1;
};

inline int run_count(const CountArgs& a, const CommonOptions& common, Output& out, std::ostream& err) {
    const auto ks = parse_k_range(a.k);
    CountOptions opts;
    opts.threads = common.threads;
    opts.field_bound = common.bound;

    const int sources = !a.diagonal.empty() + !a.variety.empty() + (a.ngon > 0) + !a.chain.empty();
    if (sources != 1) throw invalid_input("give exactly one of --diagonal, --variety, --ngon, --chain");
    if (!a.chain.empty() && a.chain.size() != 2) throw invalid_input("--chain takes N,n");

    std::optional<VarietySpec> spec;
    if (!a.diagonal.empty()) {
        DiagonalForm f = parse_diagonal(a.diagonal);
        spec = VarietySpec{f, f.to_system()};
    } else if (!a.variety.empty()) {
        spec = variety_from_string(read_json_arg(a.variety));
    }
    if (spec && a.oracle != "auto" && a.oracle != "brute" && a.oracle != "convolution" && a.oracle != "both")
        throw invalid_input("unknown oracle '" + a.oracle + "'");
    if (spec && !spec->diagonal && (a.oracle == "convolution" || a.oracle == "both"))
        throw invalid_input("the convolution oracle needs a diagonal form");

    bool agree = true;
    std::vector<std::vector<std::string>> rows;
    json counts = json::array();
    for (unsigned k : ks) {
        const Integer q = field_order(a.p, a.e, k);
        Integer n;
        if (a.ngon > 0) {
            n = count_ngon(a.ngon, a.p, a.e, k);
        } else if (!a.chain.empty()) {
            n = count_chain(a.chain[0], a.chain[1], a.p, a.e, k);
        } else if (a.oracle == "both") {
            n = count_diagonal(*spec->diagonal, a.p, a.e, k, opts);
            const Integer brute = count_projective(spec->system, a.p, a.e, k, opts);
            if (brute != n) {
                err << "oracles disagree over F_" << q.get_str() << ": convolution " << n.get_str() << ", brute "
                    << brute.get_str() << '\n';
                agree = false;
            }
        } else if (spec->diagonal && a.oracle != "brute") {
            n = count_diagonal(*spec->diagonal, a.p, a.e, k, opts);
        } else {
            n = count_projective(spec->system, a.p, a.e, k, opts);
        }
        rows.push_back({std::to_string(k), q.get_str(), n.get_str()});
        counts.push_back({{"k", k}, {"q", integer_to_json(q)}, {"count", integer_to_json(n)}});
    }

    switch (out.format()) {
        case Format::json:
            out.emit(json{{"p", a.p}, {"e", a.e}, {"counts", counts}});
            break;
        case Format::csv: {
            std::string s = "k,q,count\n";
            for (const auto& r : rows) s += r[0] + ',' + r[1] + ',' + r[2] + '\n';
            out.emit(s);
            break;
        }
        case Format::table:
            out.emit(rows.size() == 1 ? rows[0][2] : text_table({"k", "q", "count"}, rows));
            break;
    }
    return agree ? kExitOk : kExitCheckFailed;
}

struct HeightArgs {
    std::string mode;
    unsigned d = 4, h = 1, e = 1, bound = 2;
    long a = 1;
    std::uint64_t p = 0;
    std::string count;
    bool print_series = false;
};

inline int run_height(const HeightArgs& a, Output& out) {
    if (a.mode == "diagonal") {
        const HeightResult r = diagonal_height(a.d, a.p);
        if (out.format() == Format::json)
            out.emit(json{{"d", a.d}, {"p", a.p}, {"height", to_json(r)}});
        else
            out.emit(r.to_string());
    } else if (a.mode == "formal") {
        const PowerSeriesQ log = stienstra_log(a.d, Integer(a.a), upow(a.p, a.bound));
        const HeightResult r = detect_height(log, a.p, a.bound);
        json j{{"d", a.d}, {"a", a.a}, {"p", a.p}, {"bound", a.bound}, {"height", to_json(r)}};
        std::string text = r.to_string();
        if (a.print_series) {
            const std::size_t order = r.is_finite() ? upow(a.p, r.value) : upow(a.p, a.bound);
            const PowerSeriesQ ps = mult_by_p(log, a.p, order);
            j["p_series"] = to_json(ps);
            text = "[" + std::to_string(a.p) + "](t) = " + ps.to_string() + " + O(t^" + std::to_string(order + 1) +
                   ")\n" + text;
        }
        if (out.format() == Format::json)
            out.emit(j);
        else
            out.emit(text);
    } else if (a.mode == "elliptic") {
        const Integer count = parse_integer(a.count);
        const HeightResult r = elliptic_height(a.p, a.e, count);
        if (out.format() == Format::json)
            out.emit(json{{"p", a.p}, {"e", a.e}, {"count", integer_to_json(count)}, {"height", to_json(r)}});
        else
            out.emit(r.to_string());
    } else if (a.mode == "slopes") {
        const auto data = dieudonne_slopes(a.h, a.p);
        IntPoly charpoly(data.charpoly);
        json slopes = json::array();
        std::string text;
        for (const auto& s : data.slopes) {
            slopes.push_back(s.get_str());
            text += (text.empty() ? "" : " ") + s.get_str();
        }
        if (out.format() == Format::json)
            out.emit(json{{"h", a.h}, {"p", a.p}, {"charpoly", charpoly.to_string()}, {"slopes", slopes}});
        else
            out.emit("charpoly: " + charpoly.to_string() + "\nslopes: " + text);
    }
    return kExitOk;
}

struct ZetaArgs {
    std::string mode, type = "III", counts, example;
    std::uint64_t q = 0;
    std::optional<long> trace;
    long M = 0, M1 = 0, M2 = 0, m = 0, d = 0, T = 0;
    unsigned N = 1, n = 1;
    std::size_t expand = 0;
};

inline int emit_zeta(const RationalZeta& z, std::size_t expand, Output& out, json extra = json::object(),
                     const std::string& preamble = "") {
    json j = extra;
    j["zeta"] = to_json(z);
    std::string text = preamble + "Z(t) = " + z.to_string();
    if (expand > 0) {
        const PowerSeriesQ s = expand_rational(z, expand);
        j["series"] = to_json(s);
        text += "\n     = " + s.to_string() + " + O(t^" + std::to_string(expand + 1) + ")";
    }
    if (out.format() == Format::json)
        out.emit(j);
    else
        out.emit(text);
    return kExitOk;
}

inline int run_zeta(const ZetaArgs& a, Output& out, std::ostream& err) {
    if (a.mode == "log-k3" || a.mode == "log-enriques") {
        LogZetaKind kind = LogZetaKind::enriques;
        if (a.mode == "log-k3") {
            if (a.type != "II" && a.type != "III") throw invalid_input("--type must be II or III");
            kind = a.type == "II" ? LogZetaKind::k3_type_ii : LogZetaKind::k3_type_iii;
        }
        const LogZeta lz = build_log_zeta(kind, a.q, a.trace);
        json degrees = json::array();
        for (const auto& f : lz.per_degree) degrees.push_back(to_json(f));
        std::string text;
        for (int i = 0; i <= 4; ++i)
            if (!lz.per_degree[i].is_one())
                text += "det(1-tF|H^" + std::to_string(i) + ") = " + lz.per_degree[i].to_string() + "\n";
        return emit_zeta(lz.zeta, a.expand, out, json{{"kind", to_string(kind)}, {"q", a.q}, {"per_degree", degrees}},
                         text);
    }
    if (a.mode == "k3" || a.mode == "enriques") {
        if (a.type != "II" && a.type != "III") throw invalid_input("--type must be II or III");
        SnclSurfaceData s;
        const bool ii = a.type == "II";
        s.kind = a.mode == "k3" ? (ii ? SnclKind::k3_type_ii : SnclKind::k3_type_iii)
                                : (ii ? SnclKind::enriques_type_ii : SnclKind::enriques_type_iii);
        s.q = a.q;
        s.M = a.M;
        s.M1 = a.M1;
        s.M2 = a.M2;
        s.m = a.m;
        s.d = a.d;
        s.T = a.T;
        if (ii && !a.trace) throw invalid_input("Type II needs --trace");
        s.trace = a.trace.value_or(0);
        const RationalZeta z = a.mode == "k3" ? build_k3_zeta(s) : build_enriques_zeta(s);
        for (const auto& w : sncl_warnings(s)) err << "warning: " << w << '\n';
        return emit_zeta(z, a.expand, out, json{{"kind", to_string(s.kind)}, {"q", a.q}});
    }
    if (a.mode == "counts") {
        const auto counts = parse_counts(a.counts);
        const PowerSeriesQ s = zeta_series_from_counts(counts);
        if (out.format() == Format::json)
            out.emit(json{{"series", to_json(s)}});
        else
            out.emit("Z(t) = " + s.to_string() + " + O(t^" + std::to_string(counts.size() + 1) + ")");
        return kExitOk;
    }
    if (a.mode == "strata") {
        const Integer q(static_cast<unsigned long>(a.q));
        prime_power_decompose(a.q);
        std::vector<FrobClass> levels;
        std::vector<Integer> counts;
        const std::size_t K = a.expand > 0 ? a.expand : 4;
        for (std::size_t k = 1; k <= K; ++k) {
            const Integer Q = ipow(q, k);
            if (a.example == "pn")
                counts.push_back(projective_space_count(a.N, Q));
            else if (a.example == "ngon")
                counts.push_back(count_from_strata(ngon_strata(a.n, Q)));
            else if (a.example == "chain")
                counts.push_back(count_from_strata(chain_strata(a.N, a.n, Q)));
            else
                throw invalid_input("--example must be pn, ngon or chain");
        }
        if (a.example == "pn")
            levels = strata::projective_space(a.N, q);
        else if (a.example == "ngon")
            levels = strata::ngon(a.n, q);
        else
            levels = strata::chain(a.N, a.n, q);
        const RationalZeta z = strata_zeta(levels);
        const PowerSeriesQ lhs = expand_rational(z, K);
        const PowerSeriesQ rhs = zeta_series_from_counts(counts);
        const bool match = lhs == rhs;
        json extra{{"example", a.example}, {"q", a.q}, {"match", match}, {"counts_series", to_json(rhs)}};
        std::string text;
        if (out.format() == Format::table) {
            text = "Z(t) = " + z.to_string() + "\n     = " + lhs.to_string() + " + O(t^" + std::to_string(K + 1) +
                   ")\ncounts: " + rhs.to_string() + "\n" + (match ? "match" : "MISMATCH");
            out.emit(text);
        } else {
            extra["zeta"] = to_json(z);
            extra["series"] = to_json(lhs);
            out.emit(extra);
        }
        return match ? kExitOk : kExitCheckFailed;
    }
    throw invalid_input("unknown zeta mode '" + a.mode + "'");
}

struct CongruenceArgs {
    std::string mode, counts, height = "inf", variety, count;
    std::uint64_t p = 0;
    unsigned e = 1, kmax = 1;
};

inline int emit_report(const CongruenceReport& r, Output& out) {
    switch (out.format()) {
        case Format::json:
            out.emit(to_json(r));
            break;
        case Format::csv: {
            std::string s = "k,count,modulus,residue,pass\n";
            for (const auto& row : r.rows)
                s += std::to_string(row.k) + ',' + row.count.get_str() + ',' + row.modulus.get_str() + ',' +
                     row.residue.get_str() + ',' + (row.pass ? "true" : "false") + '\n';
            out.emit(s);
            break;
        }
        case Format::table:
            out.emit(to_table(r));
            break;
    }
    return r.pass() ? kExitOk : kExitCheckFailed;
}

inline int run_congruence(const CongruenceArgs& a, const CommonOptions& common, Output& out) {
    if (a.mode == "thm17") return emit_report(check_height_congruence(parse_counts(a.counts), a.p, a.e, parse_height(a.height)), out);
    if (a.mode == "gauss") return emit_report(gauss_bound_check(parse_counts(a.counts), a.p, a.e), out);
    if (a.mode == "ax-katz") {
        CountOptions opts;
        opts.threads = common.threads;
        opts.field_bound = common.bound;
        const VarietySpec v = variety_from_string(read_json_arg(a.variety));
        return emit_report(ax_katz_check(v.system, a.p, a.e, a.kmax, opts), out);
    }
    if (a.mode == "classify") {
        const Integer N = parse_integer(a.count);
        const CurveClassification c = classify_curve(a.p, a.e, N);
        const std::string verdict = c.height2 ? "Height2" : "NotHeight2";
        if (out.format() == Format::json) {
            json j{{"p", a.p}, {"e", a.e}, {"count", integer_to_json(N)}, {"classification", verdict},
                   {"branch", c.branch}, {"trace", integer_to_json(c.trace)}};
            j["alpha"] = c.alpha ? integer_to_json(*c.alpha) : json(nullptr);
            out.emit(j);
        } else {
            out.emit(verdict + " (branch " + std::to_string(c.branch) + ", trace " + c.trace.get_str() + ")");
        }
        return kExitOk;
    }
    if (a.mode == "honda-tate") {
        const TraceSet s = honda_tate_traces(a.p, a.e);
        if (out.format() == Format::json) {
            out.emit(to_json(s));
        } else {
            std::vector<std::vector<std::string>> rows;
            for (const auto& t : s.traces) {
                std::string notes;
                for (const auto& n : t.notes) notes += (notes.empty() ? "" : "; ") + n;
                rows.push_back({std::to_string(t.t), join_tags(t.cases), notes});
            }
            out.emit(text_table({"t", "cases", "notes"}, rows));
        }
        return kExitOk;
    }
    throw invalid_input("unknown congruence mode '" + a.mode + "'");
}

struct SurveyArgs {
    std::string mode, coeffs = "1,1,1,1";
    long A = 1, B = 0, D = -1;
    std::uint64_t xmax = 0;
};

inline int run_survey(const SurveyArgs& a, const CommonOptions& common, Output& out) {
    SurveyResult r;
    if (a.mode == "k3") {
        DiagonalForm f;
        f.d = 4;
        for (const auto& c : split(a.coeffs, ',')) f.coeffs.push_back(parse_coeff(c));
        r = k3_survey(f, a.xmax > 0 ? a.xmax : 200, common.threads);
    } else {
        r = elliptic_survey(EllipticCurveQ{a.A, a.B}, a.D, a.xmax > 0 ? a.xmax : 10000, common.threads);
    }
    switch (out.format()) {
        case Format::csv:
            out.emit(survey_csv(r.records));
            break;
        case Format::json:
            out.emit(to_json(r));
            break;
        case Format::table: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& rec : r.records)
                rows.push_back({std::to_string(rec.p), std::to_string(rec.f), rec.good ? "yes" : "no",
                                rec.a_p ? rec.a_p->get_str() : "-", rec.supersingular ? "yes" : "no",
                                rec.alpha ? rec.alpha->get_str() : "-", join_tags(rec.tags)});
            std::string text = text_table({"p", "f", "good", "a_p", "ss", "alpha", "cases"}, rows);
            text += "alpha histogram:";
            for (const auto& [alpha, n] : r.summary.histogram)
                text += " " + std::to_string(alpha) + ":" + std::to_string(n);
            out.emit(text);
            break;
        }
    }
    return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Point counts, formal-group heights and zeta functions over finite fields", "fqpoints"};
    app.set_config("--config", "", "Read options from a TOML file (key = value, one [section] per subcommand)", false);
    app.require_subcommand(1);

    CommonOptions common;
    std::string format = "table";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--out", common.out, "Also write the output to this file");
        sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--bound", common.bound, "Largest field size allowed");
    };

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count points over F_{p^{ek}}");
    c->add_option("--diagonal", count.diagonal, "Diagonal form, d=4,coeffs=1,1,1,1");
    c->add_option("--variety", count.variety, "Variety as inline JSON or a JSON file");
    c->add_option("--ngon", count.ngon, "Cycle of n projective lines");
    c->add_option("--chain", count.chain, "Blow-up chain N,n")->delimiter(',');
    c->add_option("--p", count.p, "Characteristic")->required();
    c->add_option("--e", count.e, "Base field degree");
    c->add_option("--k", count.k, "Extension degrees: 2, 1..3 or 1,2");
    c->add_option("--oracle", count.oracle, "brute, convolution, both or auto");
    add_common(c);

    HeightArgs height;
    auto* h = app.add_subcommand("height", "Formal group heights and slopes");
    h->add_option("mode", height.mode, "diagonal, formal, elliptic or slopes")
        ->required()
        ->check(CLI::IsMember({"diagonal", "formal", "elliptic", "slopes"}));
    h->add_option("--d", height.d, "Degree of the diagonal form");
    h->add_option("--a", height.a, "Product of the diagonal coefficients");
    h->add_option("--p", height.p, "Characteristic")->required();
    h->add_option("--e", height.e, "Field degree");
    h->add_option("--height", height.h, "Height for slopes");
    h->add_option("--bound", height.bound, "Largest height searched");
    h->add_option("--count", height.count, "Point count of the elliptic curve");
    h->add_flag("--print-series", height.print_series, "Print [p](t)");
    h->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    h->add_option("--out", common.out, "Also write the output to this file");

    ZetaArgs zeta;
    long trace = 0;
    auto* z = app.add_subcommand("zeta", "Build and expand zeta functions");
    z->add_option("mode", zeta.mode, "log-k3, log-enriques, k3, enriques, counts or strata")
        ->required()
        ->check(CLI::IsMember({"log-k3", "log-enriques", "k3", "enriques", "counts", "strata"}));
    z->add_option("--type", zeta.type, "II or III");
    z->add_option("--q", zeta.q, "Field size");
    auto* trace_opt = z->add_option("--trace", trace, "Trace of the double elliptic curve");
    z->add_option("--expand", zeta.expand, "Expand to this order");
    z->add_option("--counts", zeta.counts, "Comma-separated N_1,...,N_K");
    z->add_option("--example", zeta.example, "pn, ngon or chain");
    z->add_option("--M", zeta.M);
    z->add_option("--M1", zeta.M1);
    z->add_option("--M2", zeta.M2);
    z->add_option("--m", zeta.m);
    z->add_option("--d", zeta.d);
    z->add_option("--T", zeta.T);
    z->add_option("--N", zeta.N, "Dimension for pn and chain");
    z->add_option("--n", zeta.n, "Number of components for ngon and chain");
    z->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    z->add_option("--out", common.out, "Also write the output to this file");

    CongruenceArgs cong;
    auto* g = app.add_subcommand("congruence", "Check congruences on point counts");
    g->add_option("mode", cong.mode, "thm17, gauss, ax-katz, classify or honda-tate")
        ->required()
        ->check(CLI::IsMember({"thm17", "gauss", "ax-katz", "classify", "honda-tate"}));
    g->add_option("--counts", cong.counts, "Comma-separated N_1,...,N_K");
    g->add_option("--p", cong.p, "Characteristic")->required();
    g->add_option("--e", cong.e, "Base field degree");
    g->add_option("--height", cong.height, "1, h >= 2, or inf");
    g->add_option("--variety", cong.variety, "Variety as inline JSON or a JSON file");
    g->add_option("--kmax", cong.kmax, "Largest extension degree");
    g->add_option("--count", cong.count, "Point count of the curve");
    add_common(g);

    SurveyArgs survey;
    auto* s = app.add_subcommand("survey", "Sweep primes for supersingular reductions");
    s->add_option("mode", survey.mode, "k3 or elliptic")->required()->check(CLI::IsMember({"k3", "elliptic"}));
    s->add_option("--coeffs", survey.coeffs, "Quartic coefficients");
    s->add_option("--A", survey.A);
    s->add_option("--B", survey.B);
    s->add_option("--D", survey.D, "Quadratic field Q(sqrt D)");
    s->add_option("--xmax", survey.xmax, "Norm bound");
    add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, out, msg);
        err << msg.str();
        if (msg.str().empty()) err << e.what() << '\n';
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }
    common.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
    if (trace_opt->count() > 0) zeta.trace = trace;

    Output output(out, common);
    try {
        if (c->parsed()) return run_count(count, common, output, err);
        if (h->parsed()) return run_height(height, output);
        if (z->parsed()) return run_zeta(zeta, output, err);
        if (g->parsed()) return run_congruence(cong, common, output);
        if (s->parsed()) return run_survey(survey, common, output);
    } catch (const field_bound_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const integrality_error& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fqpoints::cli
