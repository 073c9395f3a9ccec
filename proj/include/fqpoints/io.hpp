#pragma once

// JSON, CSV and plain-text renderings of the library's value types.

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "congruence.hpp"
#include "counting.hpp"
#include "formal_group.hpp"
#include "power_series.hpp"
#include "survey.hpp"
#include "zeta.hpp"

namespace fqpoints {

using json = nlohmann::ordered_json;

/// Integers fitting in int64 become JSON numbers, larger ones strings.
inline json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw invalid_input("expected an integer, got " + j.dump());
}

inline CoeffSpec coeff_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_object() && j.contains("gen_pow") && j.size() == 1) return GenPow{j.at("gen_pow").get<std::int64_t>()};
    throw invalid_input("coefficient must be an integer or {\"gen_pow\": k}, got " + j.dump());
}

inline json coeff_to_json(const CoeffSpec& c) {
    if (const auto* n = std::get_if<std::int64_t>(&c)) return *n;
    return json{{"gen_pow", std::get<GenPow>(c).k}};
}

inline json to_json(const PolySystem& s) {
    json polys = json::array();
    for (const auto& f : s.polys) {
        json terms = json::array();
        for (const auto& t : f.terms) terms.push_back({{"exps", t.exps}, {"coeff", coeff_to_json(t.coeff)}});
        polys.push_back({{"degree", f.degree}, {"terms", terms}});
    }
    return {{"ambient", s.ambient}, {"polys", polys}};
}

inline json to_json(const DiagonalForm& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(coeff_to_json(c));
    return {{"diagonal", {{"d", f.d}, {"coeffs", coeffs}}}};
}

/// Either {"diagonal": {...}} or {"ambient": n, "polys": [...]}.
struct VarietySpec {
    std::optional<DiagonalForm> diagonal;
    PolySystem system;
};

inline VarietySpec variety_from_json(const json& j) {
    try {
        VarietySpec v;
        if (j.contains("diagonal")) {
            const auto& d = j.at("diagonal");
            DiagonalForm f;
            f.d = d.at("d").get<unsigned>();
            for (const auto& c : d.at("coeffs")) f.coeffs.push_back(coeff_from_json(c));
            f.validate();
            v.system = f.to_system();
            v.diagonal = std::move(f);
            return v;
        }
        v.system.ambient = j.at("ambient").get<unsigned>();
        for (const auto& jp : j.at("polys")) {
            HomogeneousPoly f;
            f.degree = jp.at("degree").get<unsigned>();
            for (const auto& jt : jp.at("terms"))
                f.terms.push_back({jt.at("exps").get<std::vector<unsigned>>(), coeff_from_json(jt.at("coeff"))});
            v.system.polys.push_back(std::move(f));
        }
        v.system.validate();
        return v;
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed variety spec: ") + e.what());
    }
}

inline VarietySpec variety_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("malformed variety JSON: ") + e.what());
    }
    return variety_from_json(j);
}

inline json to_json(const PowerSeriesQ& s) {
    json coeffs = json::object();
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (sgn(s[n]) != 0) coeffs[std::to_string(n)] = s[n].get_str();
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline PowerSeriesQ power_series_from_json(const json& j) {
    try {
        std::map<std::size_t, Rational> terms;
        for (const auto& [key, value] : j.at("coeffs").items())
            terms[std::stoul(key)] = parse_rational(value.is_string() ? value.get<std::string>() : value.dump());
        return PowerSeriesQ::from_map(j.at("order").get<std::size_t>(), terms);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed power series: ") + e.what());
    }
}

inline json to_json(const RationalZeta& z) {
    auto side = [](const std::vector<std::pair<IntPoly, long>>& fs) {
        json a = json::array();
        for (const auto& [P, e] : fs) a.push_back(json::array({P.to_string(), e}));
        return a;
    };
    return {{"num", side(z.numerator())}, {"den", side(z.denominator())}};
}

inline RationalZeta rational_zeta_from_json(const json& j) {
    try {
        RationalZeta z;
        for (const auto& f : j.at("num")) z.multiply(IntPoly::parse(f.at(0).get<std::string>()), f.at(1).get<long>());
        for (const auto& f : j.at("den"))
            z.multiply(IntPoly::parse(f.at(0).get<std::string>()), -f.at(1).get<long>());
        return z;
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed zeta function: ") + e.what());
    }
}

inline json to_json(const HeightResult& h) {
    static const char* kinds[] = {"finite", "infinite_by_criterion", "not_detected"};
    json j{{"kind", kinds[static_cast<int>(h.kind)]}, {"text", h.to_string()}};
    if (h.kind != HeightResult::Kind::infinite_by_criterion) j["value"] = h.value;
    return j;
}

inline HeightResult height_result_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "finite") return HeightResult::finite(j.at("value").get<unsigned>());
    if (kind == "infinite_by_criterion") return HeightResult::infinite_by_criterion();
    if (kind == "not_detected") return HeightResult::not_detected(j.at("value").get<unsigned>());
    throw invalid_input("unknown height kind '" + kind + "'");
}

inline json to_json(const CongruenceReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k},
                        {"count", integer_to_json(row.count)},
                        {"modulus", integer_to_json(row.modulus)},
                        {"residue", integer_to_json(row.residue)},
                        {"pass", row.pass}});
    return {{"check", r.check}, {"pass", r.pass()}, {"rows", rows}};
}

inline CongruenceReport congruence_report_from_json(const json& j) {
    CongruenceReport r;
    r.check = j.at("check").get<std::string>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back({row.at("k").get<unsigned>(), integer_from_json(row.at("count")),
                          integer_from_json(row.at("modulus")), integer_from_json(row.at("residue")),
                          row.at("pass").get<bool>()});
    return r;
}

inline json to_json(const TraceSet& s) {
    json traces = json::array();
    for (const auto& t : s.traces) {
        json entry{{"t", t.t}, {"cases", t.cases}};
        if (!t.notes.empty()) entry["notes"] = t.notes;
        traces.push_back(entry);
    }
    return {{"p", s.p}, {"e", s.e}, {"q", integer_to_json(s.q)}, {"traces", traces}};
}

inline TraceSet trace_set_from_json(const json& j) {
    TraceSet s;
    s.p = j.at("p").get<std::uint64_t>();
    s.e = j.at("e").get<unsigned>();
    s.q = integer_from_json(j.at("q"));
    for (const auto& t : j.at("traces"))
        s.traces.push_back({t.at("t").get<long>(), t.at("cases").get<std::vector<int>>(),
                            t.value("notes", std::vector<std::string>{})});
    return s;
}

inline std::string join_tags(const std::vector<int>& tags) {
    std::string s;
    for (int t : tags) s += (s.empty() ? "" : ";") + std::to_string(t);
    return s;
}

inline json to_json(const SurveyRecord& r) {
    json j{{"p", r.p}, {"f", r.f}, {"good", r.good}};
    j["a_p"] = r.a_p ? integer_to_json(*r.a_p) : json(nullptr);
    j["count"] = r.count ? integer_to_json(*r.count) : json(nullptr);
    j["supersingular"] = r.supersingular;
    j["alpha"] = r.alpha ? integer_to_json(*r.alpha) : json(nullptr);
    j["case_tags"] = r.tags;
    return j;
}

inline SurveyRecord survey_record_from_json(const json& j) {
    SurveyRecord r;
    r.p = j.at("p").get<std::uint64_t>();
    r.f = j.at("f").get<int>();
    r.good = j.at("good").get<bool>();
    if (!j.at("a_p").is_null()) r.a_p = integer_from_json(j.at("a_p"));
    if (!j.at("count").is_null()) r.count = integer_from_json(j.at("count"));
    r.supersingular = j.at("supersingular").get<bool>();
    if (!j.at("alpha").is_null()) r.alpha = integer_from_json(j.at("alpha"));
    r.tags = j.at("case_tags").get<std::vector<int>>();
    return r;
}

inline json to_json(const SurveySummary& s) {
    json ratios = json::object();
    for (const auto& [alpha, series] : s.ratios) {
        json a = json::array();
        for (const auto& x : series) a.push_back(x.get_str());
        ratios["alpha=" + std::to_string(alpha)] = a;
    }
    json denoms = json::array();
    for (const auto& d : s.denominators) denoms.push_back(integer_to_json(d));
    json hist = json::object();
    for (const auto& [alpha, n] : s.histogram) hist[std::to_string(alpha)] = n;
    return {{"x_samples", s.x_samples}, {"denominators", denoms}, {"ratios", ratios}, {"histogram", hist}};
}

inline SurveySummary survey_summary_from_json(const json& j) {
    SurveySummary s;
    s.x_samples = j.at("x_samples").get<std::vector<std::uint64_t>>();
    for (const auto& d : j.at("denominators")) s.denominators.push_back(integer_from_json(d));
    for (const auto& [key, series] : j.at("ratios").items()) {
        auto& out = s.ratios[std::stol(key.substr(key.find('=') + 1))];
        for (const auto& x : series) out.push_back(parse_rational(x.get<std::string>()));
    }
    for (const auto& [key, n] : j.at("histogram").items()) s.histogram[std::stol(key)] = n.get<std::uint64_t>();
    return s;
}

inline json to_json(const SurveyResult& r) {
    json records = json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    return {{"records", records}, {"summary", to_json(r.summary)}};
}

inline SurveyResult survey_result_from_json(const json& j) {
    SurveyResult r;
    for (const auto& rec : j.at("records")) r.records.push_back(survey_record_from_json(rec));
    r.summary = survey_summary_from_json(j.at("summary"));
    return r;
}

inline std::string survey_csv(const std::vector<SurveyRecord>& records) {
    std::ostringstream os;
    os << "p,f,good,a_p,supersingular,alpha,case_tags\n";
    for (const auto& r : records) {
        os << r.p << ',' << r.f << ',' << (r.good ? "true" : "false") << ',' << (r.a_p ? r.a_p->get_str() : "")
           << ',' << (r.supersingular ? "true" : "false") << ',' << (r.alpha ? r.alpha->get_str() : "") << ','
           << join_tags(r.tags) << '\n';
    }
    return os.str();
}

/// Left-aligned columns separated by two spaces.
inline std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::ostringstream cell;
            cell << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
            s += cell.str();
            if (c + 1 < cells.size()) s += "  ";
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return os.str();
}

inline std::string to_table(const CongruenceReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.rows)
        rows.push_back({std::to_string(row.k), row.count.get_str(), row.modulus.get_str(), row.residue.get_str(),
                        row.pass ? "pass" : "FAIL"});
    return text_table({"k", "count", "modulus", "residue", "pass"}, rows) +
           (r.check + ": " + (r.pass() ? "pass" : "FAIL") + "\n");
}

}  // namespace fqpoints
