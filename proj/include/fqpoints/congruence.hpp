#pragma once

// Congruence checks on point counts and the admissible Frobenius traces of
// elliptic curves over F_q.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "counting.hpp"
#include "numeric.hpp"

namespace fqpoints {

struct CongruenceRow {
    unsigned k = 0;
    Integer count;
    Integer modulus;
    Integer residue;
    bool pass = false;

    bool operator==(const CongruenceRow&) const = default;
};

struct CongruenceReport {
    std::string check;
    std::vector<CongruenceRow> rows;

    bool pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const CongruenceRow& r) { return r.pass; });
    }
    bool operator==(const CongruenceReport&) const = default;
};

/// Height of the formal group the counts are tested against.
struct HeightSpec {
    enum class Kind { one, finite, infinite };
    Kind kind = Kind::infinite;
    unsigned h = 0;

    static HeightSpec one() { return {Kind::one, 1}; }
    static HeightSpec finite(unsigned h) { return {Kind::finite, h}; }
    static HeightSpec infinite() { return {Kind::infinite, 0}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::one:
                return "1";
            case Kind::finite:
                return std::to_string(h);
            case Kind::infinite:
                return "inf";
        }
        return "?";
    }
};

namespace detail {
inline void check_counts(const std::vector<Integer>& counts, std::uint64_t p, unsigned e) {
    if (counts.empty()) throw invalid_input("need at least one count");
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    if (e == 0) throw invalid_input("field degree must be at least 1");
}

inline CongruenceRow row_one_mod(unsigned k, const Integer& count, const Integer& modulus) {
    CongruenceRow r{k, count, modulus, mod_nonneg(count, modulus), false};
    r.pass = r.residue == mod_nonneg(Integer(1), modulus);
    return r;
}
}  // namespace detail

/// Counts N_k = #Y(F_{q^k}), k = 1..K, against the height of Y's formal
/// group: infinite height forces N_k = 1 mod q^k, finite height h >= 2 forces
/// N_k = 1 mod p^{ceil(ek(1 - 1/h))}, and height 1 forces N_k != 1 mod p.
/// Only the counts are examined; the geometric hypotheses on Y are the
/// caller's responsibility.
inline CongruenceReport check_height_congruence(const std::vector<Integer>& counts, std::uint64_t p, unsigned e,
                                                HeightSpec h) {
    detail::check_counts(counts, p, e);
    if (h.kind == HeightSpec::Kind::finite && h.h == 0) throw invalid_input("height must be at least 1");
    if (h.kind == HeightSpec::Kind::finite && h.h == 1) h = HeightSpec::one();

    CongruenceReport report;
    report.check = "height " + h.to_string();
    const Integer P(static_cast<unsigned long>(p));
    for (unsigned k = 1; k <= counts.size(); ++k) {
        const Integer& N = counts[k - 1];
        const unsigned long ek = static_cast<unsigned long>(e) * k;
        switch (h.kind) {
            case HeightSpec::Kind::infinite:
                report.rows.push_back(detail::row_one_mod(k, N, ipow(P, ek)));
                break;
            case HeightSpec::Kind::finite: {
                // ceil(ek (h-1) / h)
                const unsigned long exponent = (ek * (h.h - 1) + h.h - 1) / h.h;
                report.rows.push_back(detail::row_one_mod(k, N, ipow(P, std::max(exponent, 1ul))));
                break;
            }
            case HeightSpec::Kind::one: {
                CongruenceRow r{k, N, P, mod_nonneg(N, P), false};
                r.pass = r.residue != 1;
                report.rows.push_back(r);
                break;
            }
        }
    }
    return report;
}

/// N_k = 1 mod p^{floor((ke+1)/2)}. Implied by the height-2 congruence and
/// weaker for larger heights.
inline CongruenceReport gauss_bound_check(const std::vector<Integer>& counts, std::uint64_t p, unsigned e) {
    detail::check_counts(counts, p, e);
    CongruenceReport report;
    report.check = "gauss";
    const Integer P(static_cast<unsigned long>(p));
    for (unsigned k = 1; k <= counts.size(); ++k) {
        const unsigned long exponent = (static_cast<unsigned long>(k) * e + 1) / 2;
        report.rows.push_back(detail::row_one_mod(k, counts[k - 1], ipow(P, exponent)));
    }
    return report;
}

/// Counts the intersection over F_{q^k} for k = 1..kmax and checks it is
/// 1 mod q^k. Refuses systems with sum of degrees above n.
inline CongruenceReport ax_katz_check(const PolySystem& system, std::uint64_t p, unsigned e, unsigned kmax,
                                      const CountOptions& opts = {}) {
    system.validate();
    if (system.polys.empty()) throw invalid_input("need at least one polynomial");
    if (system.total_degree() > system.ambient)
        throw hypothesis_error("sum of degrees " + std::to_string(system.total_degree()) + " exceeds n = " +
                               std::to_string(system.ambient) + "; no congruence is claimed");
    if (kmax == 0) throw invalid_input("kmax must be at least 1");
    CongruenceReport report;
    report.check = "ax-katz";
    for (unsigned k = 1; k <= kmax; ++k) {
        const Integer N = count_projective(system, p, e, k, opts);
        report.rows.push_back(detail::row_one_mod(k, N, field_order(p, e, k)));
    }
    return report;
}

struct CurveClassification {
    bool height2 = false;
    /// 1: e odd, p >= 5; 2: e odd, p in {2, 3}; 3: e even.
    int branch = 0;
    Integer trace;
    /// (N - 1 - q) / p^{e/2} when e is even and that quotient is an integer.
    std::optional<Integer> alpha;
};

/// Whether a count N = #C(F_q) of a genus-one curve is compatible with a
/// height-2 formal group. Rejects counts violating |1 + q - N| <= 2 sqrt(q).
inline CurveClassification classify_curve(std::uint64_t p, unsigned e, const Integer& N) {
    const Integer q = field_order(p, e, 1);
    const Integer t = 1 + q - N;
    if (t * t > 4 * q)
        throw invalid_input("count " + N.get_str() + " violates |1 + q - N| <= 2 sqrt(q) for q = " + q.get_str());
    CurveClassification c;
    c.trace = t;
    const Integer P(static_cast<unsigned long>(p));
    if (e % 2 == 1) {
        if (p >= 5) {
            c.branch = 1;
            c.height2 = t == 0;
        } else {
            c.branch = 2;
            c.height2 = t == 0 || abs(t) == ipow(P, (e + 1) / 2);
        }
    } else {
        c.branch = 3;
        const Integer root = ipow(P, e / 2);
        if (mpz_divisible_p(t.get_mpz_t(), root.get_mpz_t())) {
            c.alpha = -t / root;
            c.height2 = abs(*c.alpha) <= 2;
        }
    }
    return c;
}

struct TraceEntry {
    long t = 0;
    std::vector<int> cases;  // subset of {1, ..., 5}
    /// e even and t = -alpha sqrt(q): whether |alpha| = 1 needs p != 1 mod 3
    /// or alpha = 0 needs p != 1 mod 4. Informational only.
    std::vector<std::string> notes;

    bool operator==(const TraceEntry&) const = default;
};

struct TraceSet {
    std::uint64_t p = 0;
    unsigned e = 0;
    Integer q;
    std::vector<TraceEntry> traces;  // ascending in t

    std::vector<long> values() const {
        std::vector<long> v;
        for (const auto& x : traces) v.push_back(x.t);
        return v;
    }
    bool operator==(const TraceSet& o) const { return p == o.p && e == o.e && q == o.q && traces == o.traces; }

    const TraceEntry* find(long t) const {
        for (const auto& x : traces)
            if (x.t == t) return &x;
        return nullptr;
    }
};

/// Which of the five admissibility conditions t satisfies as a trace of
/// Frobenius of an elliptic curve over F_{p^e}.
inline std::vector<int> trace_cases(long t, std::uint64_t p, unsigned e) {
    std::vector<int> cases;
    const Integer q = field_order(p, e, 1);
    const Integer T(t);
    if (T * T > 4 * q) return cases;
    const Integer P(static_cast<unsigned long>(p));
    const bool even = e % 2 == 0;
    if (!mpz_divisible_ui_p(T.get_mpz_t(), p)) cases.push_back(1);
    if (even && abs(T) == 2 * ipow(P, e / 2)) cases.push_back(2);
    if (even && p % 3 != 1 && abs(T) == ipow(P, e / 2)) cases.push_back(3);
    if (!even && (p == 2 || p == 3) && abs(T) == ipow(P, (e + 1) / 2)) cases.push_back(4);
    if (t == 0 && (!even || p % 4 != 1)) cases.push_back(5);
    return cases;
}

inline TraceSet honda_tate_traces(std::uint64_t p, unsigned e) {
    TraceSet out;
    out.p = p;
    out.e = e;
    out.q = field_order(p, e, 1);
    const long bound = isqrt(4 * out.q).get_si();
    for (long t = -bound; t <= bound; ++t) {
        auto cases = trace_cases(t, p, e);
        if (cases.empty()) continue;
        TraceEntry entry{t, std::move(cases), {}};
        if (e % 2 == 0 && std::find(entry.cases.begin(), entry.cases.end(), 1) == entry.cases.end()) {
            if (std::abs(t) == ipow(Integer(static_cast<unsigned long>(p)), e / 2))
                entry.notes.push_back("|alpha|=1 requires p != 1 mod 3");
            if (t == 0) entry.notes.push_back("alpha=0 requires p != 1 mod 4");
        }
        out.traces.push_back(std::move(entry));
    }
    return out;
}

}  // namespace fqpoints
