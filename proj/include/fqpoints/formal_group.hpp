#pragma once

// One-dimensional formal groups given by their logarithm: the
// multiplication-by-p series, height detection, and the Dieudonne-module
// slope computation for a formal group of finite height.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "power_series.hpp"

namespace fqpoints {

struct HeightResult {
    enum class Kind { finite, infinite_by_criterion, not_detected };

    Kind kind = Kind::not_detected;
    /// h for finite, the searched bound for not_detected, unused otherwise.
    unsigned value = 0;

    static HeightResult finite(unsigned h) { return {Kind::finite, h}; }
    static HeightResult infinite_by_criterion() { return {Kind::infinite_by_criterion, 0}; }
    static HeightResult not_detected(unsigned bound) { return {Kind::not_detected, bound}; }

    bool is_finite() const noexcept { return kind == Kind::finite; }
    bool operator==(const HeightResult&) const = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::finite:
                return "Finite(" + std::to_string(value) + ")";
            case Kind::infinite_by_criterion:
                return "InfiniteByCriterion";
            case Kind::not_detected:
                return "NotDetectedUpTo(" + std::to_string(value) + ")";
        }
        return "?";
    }
};

/// Logarithm of the formal group of a_0 T_0^d + ... + a_{d-1} T_{d-1}^d with
/// a = a_0 ... a_{d-1}: sum_m a^m (md)!/(m!)^d t^{md+1}/(md+1).
inline PowerSeriesQ stienstra_log(unsigned d, const Integer& a, std::size_t order) {
    if (d < 1) throw invalid_input("degree must be at least 1");
    if (order < 1) throw invalid_input("series order must be at least 1");
    PowerSeriesQ l(order);
    Integer a_pow = 1;
    for (std::size_t m = 0; m * d + 1 <= order; ++m) {
        const std::size_t n = m * d + 1;
        const Integer multinomial = factorial(m * d) / ipow(factorial(m), d);
        Rational c(a_pow * multinomial, Integer(static_cast<unsigned long>(n)));
        c.canonicalize();
        l.set(n, c);
        a_pow *= a;
    }
    return l;
}

/// [p](t) = l^{-1}(p l(t)) to the given order, computed exactly over Q.
/// Throws integrality_error if any coefficient fails to be p-integral.
inline PowerSeriesQ mult_by_p(const PowerSeriesQ& log, std::uint64_t p, std::size_t order) {
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    if (log.order() < order)
        throw invalid_input("logarithm known to order " + std::to_string(log.order()) + ", need " +
                            std::to_string(order));
    if (sgn(log[0]) != 0) throw invalid_input("logarithm must have zero constant term");
    if (sgn(log[1]) == 0 || !is_p_integral(log[1], p) || reduce_mod_p(log[1], p) == 0)
        throw invalid_input("logarithm must have a p-adic unit as linear coefficient");
    const PowerSeriesQ l = log.truncated(order);
    const PowerSeriesQ series = solve_composition(l, l * Rational(static_cast<unsigned long>(p)));
    for (std::size_t n = 0; n <= order; ++n)
        if (!is_p_integral(series[n], p))
            throw integrality_error("[p](t) coefficient of t^" + std::to_string(n) + " is " + series[n].get_str() +
                                    ", not " + std::to_string(p) + "-integral");
    return series;
}

/// Reads the height off [p](t) mod p: the first nonzero coefficient must sit
/// at t^{p^h}. Only exponents up to min(p^bound, order) are inspected, and
/// NotDetectedUpTo reports the largest h actually covered.
inline HeightResult height_from_p_series(const PowerSeriesQ& pseries, std::uint64_t p, unsigned bound) {
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    Integer limit = ipow(Integer(static_cast<unsigned long>(p)), bound);
    if (limit > Integer(static_cast<unsigned long>(pseries.order())))
        limit = Integer(static_cast<unsigned long>(pseries.order()));
    const std::size_t last = limit.get_ui();
    for (std::size_t n = 1; n <= last; ++n) {
        if (reduce_mod_p(pseries[n], p) == 0) continue;
        std::size_t m = n;
        unsigned h = 0;
        while (m % p == 0) {
            m /= p;
            ++h;
        }
        if (m != 1 || h == 0)
            throw integrality_error("[p](t) mod " + std::to_string(p) + " starts at t^" + std::to_string(n) +
                                    ", which is not a power of p");
        return HeightResult::finite(h);
    }
    unsigned covered = 0;
    for (std::uint64_t pw = p; pw <= last && covered < bound; pw *= p) ++covered;
    return HeightResult::not_detected(covered);
}

/// Computes [p](t) at increasing orders p, p^2, ... and stops at the first
/// detected height.
inline HeightResult detect_height(const PowerSeriesQ& log, std::uint64_t p, unsigned bound) {
    HeightResult r = HeightResult::not_detected(0);
    std::size_t order = 1;
    for (unsigned h = 1; h <= bound; ++h) {
        order *= p;
        r = height_from_p_series(mult_by_p(log, p, order), p, h);
        if (r.is_finite()) return r;
    }
    return r;
}

/// Height of the diagonal degree-d hypersurface's formal group over F_p:
/// 1 when p = 1 mod d, infinite otherwise. The plane cubic is an elliptic
/// curve, so there the supersingular height is 2.
inline HeightResult diagonal_height(unsigned d, std::uint64_t p) {
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    if (d == 0 || d % p == 0) throw invalid_input("p = " + std::to_string(p) + " divides d = " + std::to_string(d));
    if (p % d == 1 % d) return HeightResult::finite(1);
    return d == 3 ? HeightResult::finite(2) : HeightResult::infinite_by_criterion();
}

/// Height (1 or 2) of an elliptic curve over F_q from its point count.
inline HeightResult elliptic_height(std::uint64_t p, unsigned e, const Integer& count) {
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    if (e == 0) throw invalid_input("field degree must be at least 1");
    const Integer q = ipow(Integer(static_cast<unsigned long>(p)), e);
    const Integer a = 1 + q - count;
    if (a * a > 4 * q)
        throw invalid_input("count " + count.get_str() + " violates the Hasse bound over F_" + q.get_str() +
                            " (trace " + a.get_str() + ")");
    return mpz_divisible_ui_p(a.get_mpz_t(), p) ? HeightResult::finite(2) : HeightResult::finite(1);
}

/// Characteristic polynomial det(tI - A) of an integer matrix, coefficients
/// low to high, by Faddeev-LeVerrier (all divisions are exact).
inline std::vector<Integer> characteristic_polynomial(const std::vector<std::vector<Integer>>& A) {
    const std::size_t n = A.size();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
                next[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        M = std::move(next);
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / Integer(static_cast<unsigned long>(k));
    }
    return c;
}

/// p-adic valuations of the roots of a polynomial (coefficients low to high),
/// read off the lower Newton polygon of the points (i, v_p(c_i)). Sorted
/// ascending, one entry per root. A zero constant term is rejected.
inline std::vector<Rational> newton_slopes(const std::vector<Integer>& poly, std::uint64_t p) {
    if (poly.empty() || sgn(poly.front()) == 0) throw invalid_input("Newton polygon needs a nonzero constant term");
    struct Pt {
        long x, y;
    };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (sgn(poly[i]) != 0) pts.push_back({static_cast<long>(i), static_cast<long>(valuation(poly[i], p))});
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b unless it lies strictly below segment a -> pt
            if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<Rational> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long dx = hull[i].x - hull[i - 1].x;
        Rational root_valuation(Integer(hull[i - 1].y - hull[i].y), Integer(dx));
        root_valuation.canonicalize();
        for (long k = 0; k < dx; ++k) out.push_back(root_valuation);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DieudonneSlopeData {
    unsigned h = 0;
    std::uint64_t p = 0;
    std::vector<std::vector<Integer>> matrix;
    std::vector<Integer> charpoly;  // low to high
    std::vector<Rational> slopes;
};

/// Matrix of F on D/D(F - V^{h-1}) in the basis (1, V, ..., V^{h-1}):
/// F(1) = V^{h-1} and F(V^i) = p V^{i-1}. Its characteristic polynomial is
/// checked against t^h - p^{h-1}.
inline DieudonneSlopeData dieudonne_slopes(unsigned h, std::uint64_t p) {
    if (h < 1) throw invalid_input("height must be at least 1");
    if (!is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
    DieudonneSlopeData out;
    out.h = h;
    out.p = p;
    out.matrix.assign(h, std::vector<Integer>(h, 0));
    out.matrix[h - 1][0] += 1;
    for (unsigned i = 1; i < h; ++i) out.matrix[i - 1][i] = Integer(static_cast<unsigned long>(p));
    out.charpoly = characteristic_polynomial(out.matrix);

    std::vector<Integer> expected(h + 1, 0);
    expected[h] = 1;
    expected[0] -= ipow(Integer(static_cast<unsigned long>(p)), h - 1);
    if (out.charpoly != expected) throw std::logic_error("companion matrix has unexpected characteristic polynomial");
    out.slopes = newton_slopes(out.charpoly, p);
    return out;
}

}  // namespace fqpoints
