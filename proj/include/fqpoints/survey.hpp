#pragma once

// Prime sweeps classifying supersingular reductions: an elliptic curve over Q
// viewed over a quadratic field Q(sqrt D), and a diagonal quartic surface.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "congruence.hpp"
#include "counting.hpp"
#include "formal_group.hpp"
#include "numeric.hpp"

namespace fqpoints {

/// y^2 = x^3 + A x + B.
struct EllipticCurveQ {
    long A = 0;
    long B = 0;

    Integer discriminant() const {
        const Integer a(A), b(B);
        return -16 * (4 * a * a * a + 27 * b * b);
    }

    void validate() const {
        if (sgn(discriminant()) == 0) throw invalid_input("singular curve: 4A^3 + 27B^2 = 0");
    }
};

struct SurveyRecord {
    std::uint64_t p = 0;
    int f = 1;  // residue degree
    bool good = false;
    std::optional<Integer> a_p;
    /// Point count over the residue field F_{p^f}, when good.
    std::optional<Integer> count;
    bool supersingular = false;
    std::optional<Integer> alpha;
    std::vector<int> tags;

    bool operator==(const SurveyRecord&) const = default;
};

struct SurveySummary {
    std::vector<std::uint64_t> x_samples;
    /// #P(x) at each sample.
    std::vector<Integer> denominators;
    /// alpha -> #P(x; alpha) / #P(x) at each sample.
    std::map<long, std::vector<Rational>> ratios;
    std::map<long, std::uint64_t> histogram;
};

struct SurveyResult {
    std::vector<SurveyRecord> records;
    SurveySummary summary;
};

namespace detail {

/// Legendre symbol (a / p) for odd prime p.
inline int legendre(long a, std::uint64_t p) {
    const Integer A(a), P(static_cast<unsigned long>(p));
    return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

/// a_p = -sum_x chi(x^3 + Ax + B) for odd p; no reduction check.
inline long trace_by_character_sum(const EllipticCurveQ& E, std::uint64_t p) {
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y < p; ++y) chi[(y * y) % p] = 1;
    const std::uint64_t a = mod_nonneg(Integer(E.A), Integer(static_cast<unsigned long>(p))).get_ui();
    const std::uint64_t b = mod_nonneg(Integer(E.B), Integer(static_cast<unsigned long>(p))).get_ui();
    long s = 0;
    for (std::uint64_t x = 0; x < p; ++x) s += chi[(((x * x) % p * x) % p + a * x % p + b) % p];
    return -s;
}

/// 1, 2, 5, 10, 20, 50, ... up to xmax, plus xmax itself.
inline std::vector<std::uint64_t> log_samples(std::uint64_t xmax) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t decade = 1; decade <= xmax; decade *= 10) {
        for (std::uint64_t m : {1, 2, 5})
            if (m * decade <= xmax) xs.push_back(m * decade);
        if (decade > xmax / 10) break;
    }
    if (xs.empty() || xs.back() != xmax) xs.push_back(xmax);
    return xs;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers; results land by index.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min<std::size_t>(threads, n);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
}

inline bool squarefree(long D) {
    Integer n = abs(Integer(D));
    if (n <= 1) return true;
    for (Integer f = 2; f * f <= n; ++f)
        if (mpz_divisible_p(n.get_mpz_t(), Integer(f * f).get_mpz_t())) return false;
    return true;
}

}  // namespace detail

/// a_p = p + 1 - #E(F_p) for a prime p > 3 of good reduction.
inline long elliptic_trace(const EllipticCurveQ& E, std::uint64_t p) {
    E.validate();
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    if (p <= 3) throw invalid_input("elliptic_trace needs p > 3, got " + std::to_string(p));
    if (mpz_divisible_ui_p(E.discriminant().get_mpz_t(), p))
        throw invalid_input("bad reduction at p = " + std::to_string(p));
    return detail::trace_by_character_sum(E, p);
}

/// Classifies the reduction of E at each prime of Q(sqrt D) of even residue
/// degree (the rational primes p inert in Q(sqrt D)) with norm p^2 <= xmax.
/// #E(F_{p^2}) comes from a_{p^2} = a_p^2 - 2p. The summary tabulates
/// #P(x; alpha) / #P(x), where alpha = 1 needs p != 1 mod 3 and alpha = 0
/// needs p != 1 mod 4 to be counted.
inline SurveyResult elliptic_survey(const EllipticCurveQ& E, long D, std::uint64_t xmax, unsigned threads = 1) {
    E.validate();
    if (D == 0 || D == 1 || !detail::squarefree(D))
        throw invalid_input("D must be a squarefree integer other than 0 and 1, got " + std::to_string(D));
    if (xmax < 5) throw invalid_input("xmax must be at least 5");

    std::vector<std::uint64_t> inert;
    for (std::uint64_t p : primes_up_to(isqrt(Integer(static_cast<unsigned long>(xmax))).get_ui())) {
        // 2 is inert exactly when D = 5 mod 8
        const bool is_inert =
            p == 2 ? mod_nonneg(Integer(D), Integer(8)) == 5 : detail::legendre(D, p) == -1;
        if (is_inert) inert.push_back(p);
    }

    const Integer disc = E.discriminant();
    std::vector<SurveyRecord> records(inert.size());
    detail::parallel_for(inert.size(), threads, [&](std::size_t i) {
        const std::uint64_t p = inert[i];
        SurveyRecord r;
        r.p = p;
        r.f = 2;
        r.good = p != 2 && !mpz_divisible_ui_p(disc.get_mpz_t(), p);
        if (r.good) {
            const Integer P(static_cast<unsigned long>(p));
            const Integer ap(detail::trace_by_character_sum(E, p));
            const Integer q = P * P;
            const Integer a_q = ap * ap - 2 * P;
            r.a_p = ap;
            r.count = 1 + q - a_q;
            r.supersingular = mpz_divisible_ui_p(ap.get_mpz_t(), p);
            if (r.supersingular) r.alpha = (*r.count - 1 - q) / P;
            r.tags = trace_cases(a_q.get_si(), p, 2);
        }
        records[i] = std::move(r);
    });

    SurveyResult out;
    out.records = records;
    auto& s = out.summary;
    s.x_samples = detail::log_samples(xmax);
    for (long alpha = -2; alpha <= 2; ++alpha) s.ratios[alpha];
    for (const auto& r : records)
        if (r.alpha) ++s.histogram[r.alpha->get_si()];
    for (std::uint64_t x : s.x_samples) {
        Integer denom = 0;
        std::map<long, Integer> numer;
        for (const auto& r : records) {
            if (r.p * r.p > x) continue;
            ++denom;
            if (!r.good || !r.alpha) continue;
            const long alpha = r.alpha->get_si();
            if (std::abs(alpha) == 1 && r.p % 3 == 1) continue;
            if (alpha == 0 && r.p % 4 == 1) continue;
            ++numer[alpha];
        }
        s.denominators.push_back(denom);
        for (auto& [alpha, series] : s.ratios) {
            Rational ratio = sgn(denom) == 0 ? Rational(0) : Rational(numer[alpha], denom);
            ratio.canonicalize();
            series.push_back(ratio);
        }
    }
    return out;
}

/// Sweeps primes p <= xmax for a diagonal quartic surface in P^3 with integer
/// coefficients. Supersingular means p != 1 mod 4; then
/// alpha = (N - 1 - p^2) / p is checked to be an integer with |alpha| <= 22.
inline SurveyResult k3_survey(const DiagonalForm& form, std::uint64_t xmax, unsigned threads = 1) {
    form.validate();
    if (form.d != 4 || form.coeffs.size() != 4) throw invalid_input("k3_survey expects a diagonal quartic in P^3");
    std::vector<long> coeffs;
    for (const auto& c : form.coeffs) {
        if (!std::holds_alternative<std::int64_t>(c)) throw invalid_input("k3_survey needs integer coefficients");
        coeffs.push_back(std::get<std::int64_t>(c));
    }
    if (xmax < 2) throw invalid_input("xmax must be at least 2");

    const auto primes = primes_up_to(xmax);
    std::vector<SurveyRecord> records(primes.size());
    detail::parallel_for(primes.size(), threads, [&](std::size_t i) {
        const std::uint64_t p = primes[i];
        SurveyRecord r;
        r.p = p;
        r.f = 1;
        r.good = p != 2;
        for (long c : coeffs)
            if (c % static_cast<long>(p) == 0) r.good = false;
        if (r.good) {
            const Integer P(static_cast<unsigned long>(p));
            const Integer N = count_diagonal(form, p, 1, 1);
            r.count = N;
            r.a_p = N - 1 - P * P;
            r.supersingular = !diagonal_height(4, p).is_finite();
            if (r.supersingular) {
                if (!mpz_divisible_ui_p(r.a_p->get_mpz_t(), p))
                    throw std::logic_error("supersingular quartic with N != 1 mod " + std::to_string(p));
                r.alpha = *r.a_p / P;
                if (abs(*r.alpha) > 22)
                    throw std::logic_error("alpha = " + r.alpha->get_str() + " exceeds the second Betti number");
            }
        }
        records[i] = std::move(r);
    });

    SurveyResult out;
    out.records = records;
    auto& s = out.summary;
    s.x_samples = detail::log_samples(xmax);
    for (const auto& r : records)
        if (r.alpha) ++s.histogram[r.alpha->get_si()];
    for (const auto& [alpha, n] : s.histogram) s.ratios[alpha];
    for (std::uint64_t x : s.x_samples) {
        Integer denom = 0;
        std::map<long, Integer> numer;
        for (const auto& r : records) {
            if (r.p > x || !r.good) continue;
            ++denom;
            if (r.alpha) ++numer[r.alpha->get_si()];
        }
        s.denominators.push_back(denom);
        for (auto& [alpha, series] : s.ratios) {
            Rational ratio = sgn(denom) == 0 ? Rational(0) : Rational(numer[alpha], denom);
            ratio.canonicalize();
            series.push_back(ratio);
        }
    }
    return out;
}

}  // namespace fqpoints
