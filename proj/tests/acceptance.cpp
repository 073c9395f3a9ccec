// Acceptance checks. Run with no arguments for all of them, or name one or
// more of AC1..AC10. Prints one PASS/FAIL line per check; exit status 1 if
// any selected check fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fqpoints/congruence.hpp"
#include "fqpoints/counting.hpp"
#include "fqpoints/formal_group.hpp"
#include "fqpoints/survey.hpp"
#include "fqpoints/zeta.hpp"
#include "oracles.hpp"

using namespace fqpoints;

namespace {

// Wall-clock limits, in seconds.
constexpr double kCountLimit = 1.0;
constexpr double kCongruenceLimit = 10.0;
constexpr double kAxKatzLimit = 60.0;
constexpr double kSurveyLimit = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed sub-checks; the criterion passes when there are none.
struct Check {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

DiagonalForm fermat_quartic() { return DiagonalForm{4, std::vector<CoeffSpec>(4, std::int64_t{1})}; }

std::string str(const Integer& n) { return n.get_str(); }

void ac1(Check& c) {
    const std::vector<std::pair<std::uint64_t, long>> expected{{3, 4}, {5, 0}, {7, 64}};
    const PolySystem sys = fermat_quartic().to_system();
    for (auto [p, n] : expected) {
        auto t0 = Clock::now();
        const Integer brute = count_projective(sys, p, 1, 1);
        const double tb = seconds_since(t0);
        t0 = Clock::now();
        const Integer conv = count_diagonal(fermat_quartic(), p, 1, 1);
        const double tc = seconds_since(t0);
        const std::string where = "F_" + std::to_string(p);
        c.note(where + ": brute " + str(brute) + ", convolution " + str(conv));
        c.expect(brute == conv, where + ": routes disagree");
        c.expect(brute == n, where + ": expected " + std::to_string(n) + ", counted " + str(brute));
        c.expect(tb < kCountLimit && tc < kCountLimit, where + ": over " + std::to_string(kCountLimit) + " s");
    }
}

void ac2(Check& c) {
    const auto t0 = Clock::now();
    auto counts_for = [&](std::uint64_t p) {
        std::vector<Integer> ns;
        for (unsigned k = 1; k <= 2; ++k) ns.push_back(count_diagonal(fermat_quartic(), p, 1, k));
        return ns;
    };
    const auto n3 = counts_for(3);
    const Integer brute9 = count_projective(fermat_quartic().to_system(), 3, 1, 2);
    c.expect(n3[1] == 280 && brute9 == 280, "F_9: convolution " + str(n3[1]) + ", brute " + str(brute9));
    for (std::uint64_t p : {3u, 7u}) {
        const auto ns = p == 3 ? n3 : counts_for(p);
        const auto r = check_height_congruence(ns, p, 1, HeightSpec::infinite());
        c.note("p=" + std::to_string(p) + ": N = " + str(ns[0]) + ", " + str(ns[1]));
        c.expect(r.pass(), "p=" + std::to_string(p) + ": infinite-height congruence fails");
    }
    const auto n5 = counts_for(5);
    c.note("p=5: N = " + str(n5[0]) + ", " + str(n5[1]));
    for (const auto& n : n5) c.expect(mod_nonneg(n, Integer(5)) != 1, "p=5: " + str(n) + " = 1 mod 5");
    c.expect(check_height_congruence(n5, 5, 1, HeightSpec::one()).pass(), "p=5: height-one check fails");
    const double t = seconds_since(t0);
    c.expect(t < kCongruenceLimit, "took " + std::to_string(t) + " s");
}

void ac3(Check& c) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        const auto l = stienstra_log(4, 1, p * p);
        const HeightResult series = detect_height(l, p, 2);
        const HeightResult criterion = diagonal_height(4, p);
        const HeightResult expected = p % 4 == 1 ? HeightResult::finite(1) : HeightResult::not_detected(2);
        c.note("p=" + std::to_string(p) + ": " + series.to_string());
        c.expect(series == expected, "p=" + std::to_string(p) + ": got " + series.to_string());
        c.expect(criterion.is_finite() == series.is_finite(), "p=" + std::to_string(p) + ": disagrees with criterion");
        try {
            mult_by_p(stienstra_log(4, 1, 50), p, 50);
        } catch (const integrality_error& e) {
            c.expect(false, "p=" + std::to_string(p) + ": " + e.what());
        }
    }
}

void ac4(Check& c) {
    // y^2 z = x^3 + x z^2
    const PolySystem curve{2, {HomogeneousPoly{3,
                                               {Term{{0, 2, 1}, std::int64_t{1}}, Term{{3, 0, 0}, std::int64_t{-1}},
                                                Term{{1, 0, 2}, std::int64_t{-1}}}}}};
    for (std::uint64_t p : {7u, 11u, 19u, 23u}) {
        const Integer n = count_projective(curve, p, 1, 1);
        const std::string where = "p=" + std::to_string(p);
        c.expect(n == p + 1, where + ": N = " + str(n));
        c.expect(elliptic_height(p, 1, n) == HeightResult::finite(2), where + ": height");
        c.expect(classify_curve(p, 1, n).height2, where + ": classification");
        c.expect(check_height_congruence({n}, p, 1, HeightSpec::finite(2)).pass(), where + ": congruence");
    }
}

void ac5(Check& c) {
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned h = 1; h <= 10; ++h) {
            const auto d = dieudonne_slopes(h, p);
            std::vector<Integer> expected(h + 1, 0);
            expected[h] = 1;
            expected[0] = -ipow(Integer(static_cast<unsigned long>(p)), h - 1);
            const std::string where = "h=" + std::to_string(h) + " p=" + std::to_string(p);
            c.expect(d.charpoly == expected, where + ": characteristic polynomial");
            const auto independent = oracle::charpoly_by_interpolation(d.matrix);
            bool same = independent.size() == expected.size();
            for (std::size_t i = 0; same && i < expected.size(); ++i) same = independent[i] == Rational(expected[i]);
            c.expect(same, where + ": interpolated characteristic polynomial");
            Rational slope(h - 1, h);
            slope.canonicalize();
            c.expect(d.slopes == std::vector<Rational>(h, slope), where + ": slopes");
        }
}

void ac6(Check& c) {
    const std::size_t K = 4;
    int cases = 0;
    for (long qv : {2L, 3L, 5L}) {
        const auto p = static_cast<std::uint64_t>(qv);
        const Integer q(qv);
        auto compare = [&](const std::vector<FrobClass>& strata, auto count, const std::string& what) {
            std::vector<Integer> ns;
            for (unsigned k = 1; k <= K; ++k) ns.push_back(count(k));
            ++cases;
            c.expect(expand_rational(strata_zeta(strata), K) == zeta_series_from_counts(ns), what + " q=" + str(q));
        };
        for (unsigned N = 0; N <= 3; ++N) {
            PolySystem empty{N, {}};
            compare(strata::projective_space(N, q),
                    [&](unsigned k) {
                        const Integer Q = ipow(q, k);
                        return ipow(Q, N + 1) <= 1000000 ? count_projective(empty, p, 1, k) : projective_space_count(N, Q);
                    },
                    "P^" + std::to_string(N));
        }
        for (unsigned n = 1; n <= 5; ++n)
            compare(strata::ngon(n, q), [&](unsigned k) { return count_ngon(n, p, 1, k); }, std::to_string(n) + "-gon");
        for (unsigned N = 1; N <= 2; ++N)
            for (unsigned n = 1; n <= 3; ++n)
                compare(strata::chain(N, n, q), [&](unsigned k) { return count_chain(N, n, p, 1, k); },
                        "chain N=" + std::to_string(N) + " n=" + std::to_string(n));
    }
    c.note(std::to_string(cases) + " cases to order " + std::to_string(K));
}

SnclSurfaceData surface(SnclKind kind, std::uint64_t q, long M, long M1, long M2, long m, long d, long T, long trace = 0) {
    SnclSurfaceData s;
    s.kind = kind;
    s.q = q;
    s.M = M;
    s.M1 = M1;
    s.M2 = M2;
    s.m = m;
    s.d = d;
    s.T = T;
    s.trace = trace;
    return s;
}

void ac7(Check& c) {
    auto golden = [&](const RationalZeta& z, const std::string& expected, const std::string& what) {
        c.expect(z.to_string() == expected, what + ": " + z.to_string());
    };
    golden(build_k3_zeta(surface(SnclKind::k3_type_iii, 3, 4, 4, 0, 0, 6, 4)), "(1-3*t)^2 / ((1-t)^2*(1-9*t)^4)",
           "K3 III");
    golden(build_k3_zeta(surface(SnclKind::k3_type_ii, 3, 2, 0, 2, 0, 1, 0, 0)),
           "1 / ((1-t)*(1+3*t^2)*(1-3*t)^3*(1-9*t)^2)", "K3 II");
    golden(build_enriques_zeta(surface(SnclKind::enriques_type_iii, 3, 3, 3, 0, 1, 3, 1)),
           "1 / ((1-t)*(1-3*t)*(1-9*t)^3)", "Enriques III");
    golden(build_enriques_zeta(surface(SnclKind::enriques_type_ii, 5, 2, 0, 2, 0, 1, 0, 1)),
           "(1-5*t+125*t^2) / ((1-t)*(1-5*t)^5*(1-25*t)^2)", "Enriques II");
    golden(build_log_zeta(LogZetaKind::k3_type_iii, 3).zeta, "1 / ((1-t)^2*(1-3*t)^19*(1-9*t))", "log K3 III");
    golden(build_log_zeta(LogZetaKind::k3_type_ii, 5, 2).zeta, "1 / ((1-t)*(1-2*t+5*t^2)*(1-5*t)^18*(1-25*t))",
           "log K3 II");
    golden(build_log_zeta(LogZetaKind::enriques, 5).zeta, "1 / ((1-t)*(1-5*t)^10*(1-25*t))", "log Enriques");

    auto rejects = [&](auto build, const SnclSurfaceData& s, const std::string& what) {
        try {
            build(s);
            c.expect(false, what + " accepted");
        } catch (const invalid_input&) {
        }
    };
    rejects(build_k3_zeta, surface(SnclKind::k3_type_iii, 3, 4, 4, 0, 0, 6, 5), "K3 III with M-d+T = 3");
    rejects(build_enriques_zeta, surface(SnclKind::enriques_type_iii, 3, 3, 3, 0, 1, 3, 2), "Enriques III with M-d+T = 2");
    rejects(build_enriques_zeta, surface(SnclKind::enriques_type_iii, 2, 3, 3, 0, 1, 3, 1), "Enriques over F_2");
    rejects(build_enriques_zeta, surface(SnclKind::enriques_type_ii, 4, 2, 0, 2, 0, 1, 0, 1), "Enriques over F_4");
}

void ac8(Check& c) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(8);
    const std::vector<std::pair<std::uint64_t, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        PolySystem sys{n, {}};
        unsigned budget = n;
        while (budget > 0 && (sys.polys.empty() || rng() % 2 == 0)) {
            const unsigned d = 1 + static_cast<unsigned>(rng() % budget);
            budget -= d;
            HomogeneousPoly f{d, {}};
            const int terms = 1 + static_cast<int>(rng() % 5);
            for (int t = 0; t < terms; ++t) {
                std::vector<unsigned> exps(n + 1, 0);
                for (unsigned i = 0; i < d; ++i) ++exps[rng() % (n + 1)];
                f.terms.push_back({exps, std::int64_t{static_cast<std::int64_t>(rng() % 9) - 4}});
            }
            sys.polys.push_back(f);
        }
        const auto [p, e] = fields[static_cast<std::size_t>(trial) % fields.size()];
        const auto r = ax_katz_check(sys, p, e, 1);
        c.expect(r.pass(), "trial " + std::to_string(trial) + ": N = " + str(r.rows[0].count));
    }
    const double t = seconds_since(t0);
    c.note("50 systems in " + std::to_string(t) + " s");
    c.expect(t < kAxKatzLimit, "over the time limit");
}

void ac9(Check& c) {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {5, 1}, {3, 2}, {5, 2}, {7, 2}}) {
        const auto s = honda_tate_traces(p, e);
        const auto v = s.values();
        const std::set<long> got(v.begin(), v.end());
        const std::string where = "q=" + str(s.q);
        c.expect(got == oracle::honda_tate(static_cast<long>(p), static_cast<int>(e)), where + ": differs from enumeration");
        for (long t : v) c.expect(got.count(-t) == 1, where + ": " + std::to_string(t) + " without its negative");
        c.note(where + ": " + std::to_string(v.size()) + " traces");
    }
}

void ac10(Check& c) {
    auto t0 = Clock::now();
    const auto k3 = k3_survey(fermat_quartic(), 200);
    const double t = seconds_since(t0);
    c.note("quartic survey to 200 in " + std::to_string(t) + " s");
    c.expect(t < kSurveyLimit, "quartic survey over the time limit");
    for (const auto& r : k3.records) {
        if (!r.good || r.p % 4 == 1) continue;
        const std::string where = "p=" + std::to_string(r.p);
        c.expect(r.supersingular && r.alpha.has_value(), where + ": not flagged supersingular");
        if (!r.alpha) continue;
        c.expect(abs(*r.alpha) <= 22, where + ": |alpha| > 22");
        c.expect(mod_nonneg(*r.count, Integer(static_cast<unsigned long>(r.p))) == 1, where + ": N != 1 mod p");
    }
    for (auto [p, alpha] : std::vector<std::pair<std::uint64_t, long>>{{3, -2}, {7, 2}}) {
        for (const auto& r : k3.records) {
            if (r.p != p) continue;
            const std::string got = r.alpha ? r.alpha->get_str() : "none";
            c.note("p=" + std::to_string(p) + ": N = " + str(*r.count) + ", alpha = " + got);
            c.expect(r.alpha && *r.alpha == alpha, "p=" + std::to_string(p) + ": expected alpha " + std::to_string(alpha) +
                                                       ", got " + got);
        }
    }
    t0 = Clock::now();
    const auto ell = elliptic_survey(EllipticCurveQ{1, 0}, -1, 10000);
    std::size_t ss = 0;
    for (const auto& r : ell.records) {
        if (!r.good || !r.supersingular) continue;
        ++ss;
        c.expect(r.alpha && *r.alpha == 2, "elliptic p=" + std::to_string(r.p) + ": alpha != 2");
    }
    c.note(std::to_string(ss) + " supersingular inert primes, elliptic survey in " + std::to_string(seconds_since(t0)) + " s");
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> all{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
    std::vector<std::string> wanted(argv + 1, argv + argc);
    bool any_failed = false;
    for (const auto& [name, fn] : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        for (const auto& n : c.notes) std::cout << "  " << name << ": " << n << '\n';
        const bool ok = c.failures.empty();
        any_failed = any_failed || !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        for (std::size_t i = 0; i < c.failures.size(); ++i) std::cout << (i == 0 ? " - " : "; ") << c.failures[i];
        std::cout << std::endl;
    }
    return any_failed ? 1 : 0;
}
