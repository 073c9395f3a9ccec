#pragma once

// Zeta functions as factored rational functions in t with integer
// characteristic-polynomial factors.
//
// A FrobClass is a virtual sum of (graded vector space, Frobenius) pairs,
// each recorded only through det(1 - tF). Its zeta function carries the
// factor of cohomological degree j with exponent (-1)^{j+1}. The strata
// formula multiplies in a further (-1)^i for the level of Y^(i).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "power_series.hpp"

namespace fqpoints {

/// Integer polynomial in t, coefficients low to high, no trailing zeros.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
    IntPoly(std::initializer_list<long> c) {
        for (long x : c) c_.emplace_back(x);
        trim();
    }

    static IntPoly one() { return IntPoly({1}); }
    /// 1 - a t
    static IntPoly one_minus(const Integer& a) { return IntPoly(std::vector<Integer>{1, -a}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    IntPoly operator*(const IntPoly& b) const {
        if (c_.empty() || b.c_.empty()) return {};
        std::vector<Integer> r(c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }

    /// P(s t)
    IntPoly scaled(const Integer& s) const {
        std::vector<Integer> r(c_);
        Integer pw = 1;
        for (auto& x : r) {
            x *= pw;
            pw *= s;
        }
        return IntPoly(std::move(r));
    }

    PowerSeriesQ to_series(std::size_t order) const {
        PowerSeriesQ s(order);
        for (std::size_t i = 0; i < c_.size() && i <= order; ++i) s.set(i, Rational(c_[i]));
        return s;
    }

    bool operator==(const IntPoly& b) const { return c_ == b.c_; }
    bool operator!=(const IntPoly& b) const { return !(*this == b); }

    /// Canonical order: by the size |c_n|^{1/n} of the reciprocal roots, then
    /// degree, then coefficient by coefficient from t^1 up comparing absolute
    /// values, negative before positive on ties.
    bool operator<(const IntPoly& b) const {
        if (degree() > 0 && b.degree() > 0) {
            const Integer lhs = ipow(Integer(abs(c_.back())), static_cast<unsigned long>(b.degree()));
            const Integer rhs = ipow(Integer(abs(b.c_.back())), static_cast<unsigned long>(degree()));
            if (lhs != rhs) return lhs < rhs;
        }
        if (degree() != b.degree()) return degree() < b.degree();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const int ca = cmp(abs(c_[i]), abs(b.c_[i]));
            if (ca != 0) return ca < 0;
            if (c_[i] != b.c_[i]) return c_[i] < b.c_[i];
        }
        return !c_.empty() && c_[0] < b.c_[0];
    }

    /// ASCII rendering "c0+c1*t+c2*t^2", unit coefficients written bare.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Integer& c = c_[i];
            if (sgn(c) == 0) continue;
            if (i == 0) {
                os << c.get_str();
            } else {
                if (sgn(c) < 0)
                    os << '-';
                else if (!first)
                    os << '+';
                const Integer a = abs(c);
                if (a != 1) os << a.get_str() << '*';
                os << 't';
                if (i > 1) os << '^' << i;
            }
            first = false;
        }
        return os.str();
    }

    static IntPoly parse(const std::string& text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw invalid_input("empty polynomial");
        std::map<std::size_t, Integer> terms;
        std::size_t i = 0;
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            }
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
            Integer coef = digits.empty() ? Integer(1) : Integer(digits);
            std::size_t power = 0;
            if (i < s.size() && s[i] == '*') {
                if (digits.empty()) throw invalid_input("malformed polynomial '" + text + "'");
                ++i;
                if (i >= s.size() || s[i] != 't') throw invalid_input("malformed polynomial '" + text + "'");
            }
            if (i < s.size() && s[i] == 't') {
                ++i;
                power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string pdigits;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) pdigits += s[i++];
                    if (pdigits.empty()) throw invalid_input("malformed polynomial '" + text + "'");
                    power = std::stoul(pdigits);
                }
            } else if (digits.empty()) {
                throw invalid_input("malformed polynomial '" + text + "'");
            }
            terms[power] += sign * coef;
            if (i < s.size() && s[i] != '+' && s[i] != '-') throw invalid_input("malformed polynomial '" + text + "'");
        }
        std::vector<Integer> c(terms.rbegin()->first + 1, 0);
        for (const auto& [k, v] : terms) c[k] = v;
        return IntPoly(std::move(c));
    }

   private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// Power sums p_k = sum alpha_i^k of the reciprocal roots of
/// P(t) = prod (1 - alpha_i t), k = 1..n, from Newton's identities.
inline std::vector<Integer> reciprocal_power_sums(const IntPoly& P, std::size_t n) {
    if (P[0] != 1) throw invalid_input("expected constant term 1 in " + P.to_string());
    std::vector<Integer> ps(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        Integer s = -Integer(static_cast<unsigned long>(k)) * P[k];
        for (std::size_t i = 1; i < k; ++i) s -= P[i] * ps[k - i];
        ps[k] = s;
    }
    return ps;
}

/// prod_{i,j} (1 - alpha_i beta_j t): the det(1 - tF) of a tensor product.
inline IntPoly tensor(const IntPoly& A, const IntPoly& B) {
    const std::size_t n = static_cast<std::size_t>(A.degree()) * static_cast<std::size_t>(B.degree());
    const auto pa = reciprocal_power_sums(A, n);
    const auto pb = reciprocal_power_sums(B, n);
    std::vector<Integer> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer s = pa[k] * pb[k];
        for (std::size_t i = 1; i < k; ++i) s += c[i] * (pa[k - i] * pb[k - i]);
        c[k] = -s / Integer(static_cast<unsigned long>(k));
    }
    return IntPoly(std::move(c));
}

/// Factored rational function prod P^{e_P}; positive exponents form the
/// numerator. Every factor has constant term 1.
class RationalZeta {
   public:
    RationalZeta() = default;

    static RationalZeta factor(const IntPoly& P, long exponent) {
        RationalZeta z;
        z.multiply(P, exponent);
        return z;
    }

    void multiply(const IntPoly& P, long exponent) {
        if (P.degree() < 0 || P[0] != 1)
            throw invalid_input("zeta factor " + P.to_string() + " must have constant term 1");
        if (P.is_one() || exponent == 0) return;
        long& e = exps_[P];
        e += exponent;
        if (e == 0) exps_.erase(P);
    }

    RationalZeta operator*(const RationalZeta& b) const {
        RationalZeta r(*this);
        for (const auto& [P, e] : b.exps_) r.multiply(P, e);
        return r;
    }

    RationalZeta pow(long k) const {
        RationalZeta r;
        for (const auto& [P, e] : exps_) r.multiply(P, e * k);
        return r;
    }

    RationalZeta inverse() const { return pow(-1); }

    bool operator==(const RationalZeta& b) const { return exps_ == b.exps_; }
    bool operator!=(const RationalZeta& b) const { return !(*this == b); }

    bool is_one() const { return exps_.empty(); }

    std::vector<std::pair<IntPoly, long>> numerator() const {
        std::vector<std::pair<IntPoly, long>> out;
        for (const auto& [P, e] : exps_)
            if (e > 0) out.emplace_back(P, e);
        return out;
    }

    std::vector<std::pair<IntPoly, long>> denominator() const {
        std::vector<std::pair<IntPoly, long>> out;
        for (const auto& [P, e] : exps_)
            if (e < 0) out.emplace_back(P, -e);
        return out;
    }

    long exponent(const IntPoly& P) const {
        auto it = exps_.find(P);
        return it == exps_.end() ? 0 : it->second;
    }

    /// deg(denominator) - deg(numerator), the l-adic Euler characteristic
    /// with compact support when this is a point-count zeta function.
    long euler_characteristic() const {
        long s = 0;
        for (const auto& [P, e] : exps_) s -= e * P.degree();
        return s;
    }

    /// "(1-3*t)^2 / ((1-t)^2*(1-9*t)^4)", factors in canonical order.
    std::string to_string() const {
        auto product = [](const std::vector<std::pair<IntPoly, long>>& fs) {
            std::string s;
            for (const auto& [P, e] : fs) {
                if (!s.empty()) s += '*';
                s += '(' + P.to_string() + ')';
                if (e != 1) s += '^' + std::to_string(e);
            }
            return s;
        };
        const auto num = numerator();
        const auto den = denominator();
        std::string s = num.empty() ? "1" : product(num);
        if (!den.empty()) {
            const bool wrap = den.size() > 1;
            s += " / " + std::string(wrap ? "(" : "") + product(den) + (wrap ? ")" : "");
        }
        return s;
    }

   private:
    std::map<IntPoly, long> exps_;
};

/// Exact expansion of a factored rational function to t^order.
inline PowerSeriesQ expand_rational(const RationalZeta& z, std::size_t order) {
    PowerSeriesQ s = PowerSeriesQ::constant(1, order);
    for (const auto& [P, e] : z.numerator()) {
        const PowerSeriesQ f = P.to_series(order);
        for (long i = 0; i < e; ++i) s = s * f;
    }
    for (const auto& [P, e] : z.denominator()) {
        const PowerSeriesQ f = series_inverse(P.to_series(order));
        for (long i = 0; i < e; ++i) s = s * f;
    }
    return s;
}

/// exp(sum_k N_k t^k / k) to t^K for counts N_1..N_K.
inline PowerSeriesQ zeta_series_from_counts(const std::vector<Integer>& counts) {
    if (counts.empty()) throw invalid_input("need at least one point count");
    PowerSeriesQ L(counts.size());
    for (std::size_t k = 1; k <= counts.size(); ++k)
        L.set(k, Rational(counts[k - 1], Integer(static_cast<unsigned long>(k))));
    for (std::size_t k = 1; k <= counts.size(); ++k) {
        Rational c = L[k];
        c.canonicalize();
        L.set(k, c);
    }
    return series_exp(L);
}

struct FrobFactor {
    int degree = 0;  // cohomological degree j
    int weight = 0;
    IntPoly factor;  // det(1 - tF)
    long multiplicity = 1;
};

/// Element of the Grothendieck group of (vector space, endomorphism) pairs,
/// graded by cohomological degree.
class FrobClass {
   public:
    FrobClass() = default;
    explicit FrobClass(std::vector<FrobFactor> entries) : entries_(std::move(entries)) {}

    void add(int degree, int weight, const IntPoly& factor, long multiplicity = 1) {
        entries_.push_back({degree, weight, factor, multiplicity});
    }

    const std::vector<FrobFactor>& entries() const noexcept { return entries_; }

    FrobClass operator+(const FrobClass& b) const {
        FrobClass r(*this);
        r.entries_.insert(r.entries_.end(), b.entries_.begin(), b.entries_.end());
        return r;
    }

    FrobClass operator*(long k) const {
        FrobClass r(*this);
        for (auto& f : r.entries_) f.multiplicity *= k;
        return r;
    }

    FrobClass operator-() const { return *this * -1; }
    FrobClass operator-(const FrobClass& b) const { return *this + (-b); }

   private:
    std::vector<FrobFactor> entries_;
};

/// prod_j det(1 - tF | H^j)^{(-1)^{j+1}} over the class.
inline RationalZeta class_zeta(const FrobClass& c) {
    RationalZeta z;
    for (const auto& f : c.entries()) z.multiply(f.factor, f.degree % 2 == 0 ? -f.multiplicity : f.multiplicity);
    return z;
}

/// Zeta function of an SNC scheme from the cohomology of its strata Y^(i):
/// prod_{i,j} det(1 - tF | H^j(Y^(i)))^{(-1)^{i+j+1}}.
inline RationalZeta strata_zeta(const std::vector<FrobClass>& levels) {
    RationalZeta z;
    for (std::size_t i = 0; i < levels.size(); ++i) z = z * class_zeta(levels[i]).pow(i % 2 == 0 ? 1 : -1);
    return z;
}

/// Cohomology classes of the smooth pieces that appear as strata.
namespace motive {

/// Finite set of rational points with trivial Frobenius.
inline FrobClass points(long n) {
    FrobClass c;
    c.add(0, 0, IntPoly::one_minus(1), n);
    return c;
}

/// P^N over F_q: H^{2i} has det(1 - tF) = 1 - q^i t.
inline FrobClass projective_space(unsigned N, const Integer& q) {
    FrobClass c;
    Integer qi = 1;
    for (unsigned i = 0; i <= N; ++i) {
        c.add(2 * static_cast<int>(i), 2 * static_cast<int>(i), IntPoly::one_minus(qi));
        qi *= q;
    }
    return c;
}

/// Smooth projective curve of genus g with det(1 - tF | H^1) = h1.
inline FrobClass curve(unsigned genus, const IntPoly& h1, const Integer& q) {
    if (h1.degree() != 2 * static_cast<int>(genus))
        throw invalid_input("H^1 polynomial of a genus " + std::to_string(genus) + " curve must have degree " +
                            std::to_string(2 * genus));
    FrobClass c;
    c.add(0, 0, IntPoly::one_minus(1));
    if (genus > 0) c.add(1, 1, h1);
    c.add(2, 2, IntPoly::one_minus(q));
    return c;
}

/// Elliptic curve with trace a: H^1 factor 1 - a t + q t^2.
inline FrobClass elliptic_curve(const Integer& a, const Integer& q) {
    return curve(1, IntPoly(std::vector<Integer>{1, -a, q}), q);
}

/// Tate twist (-r): every eigenvalue multiplied by q^r, degree shifted by 2r.
inline FrobClass twist(const FrobClass& c, unsigned r, const Integer& q) {
    FrobClass out;
    const Integer s = ipow(q, r);
    for (const auto& f : c.entries())
        out.add(f.degree + 2 * static_cast<int>(r), f.weight + 2 * static_cast<int>(r), f.factor.scaled(s),
                f.multiplicity);
    return out;
}

/// Kunneth formula for a product of two varieties.
inline FrobClass product(const FrobClass& a, const FrobClass& b) {
    FrobClass out;
    for (const auto& x : a.entries())
        for (const auto& y : b.entries())
            out.add(x.degree + y.degree, x.weight + y.weight, tensor(x.factor, y.factor),
                    x.multiplicity * y.multiplicity);
    return out;
}

}  // namespace motive

/// Strata classes [Y^(0), Y^(1), ...] of the stratified examples.
namespace strata {

inline std::vector<FrobClass> projective_space(unsigned N, const Integer& q) {
    return {motive::projective_space(N, q)};
}

/// Cycle of n lines: n copies of P^1 meeting in n rational points.
inline std::vector<FrobClass> ngon(unsigned n, const Integer& q) {
    if (n < 1) throw invalid_input("an n-gon needs n >= 1");
    return {motive::projective_space(1, q) * n, motive::points(n)};
}

/// P^N followed by n - 1 copies of P^{N-1} x P^1, consecutive components
/// meeting along a P^{N-1}.
inline std::vector<FrobClass> chain(unsigned N, unsigned n, const Integer& q) {
    if (N < 1 || n < 1) throw invalid_input("blow-up chain needs N >= 1 and n >= 1");
    const FrobClass ruled = motive::product(motive::projective_space(N - 1, q), motive::projective_space(1, q));
    return {motive::projective_space(N, q) + ruled * static_cast<long>(n - 1),
            motive::projective_space(N - 1, q) * static_cast<long>(n - 1)};
}

}  // namespace strata

enum class SnclKind { k3_type_ii, k3_type_iii, enriques_type_ii, enriques_type_iii };

inline std::string to_string(SnclKind k) {
    switch (k) {
        case SnclKind::k3_type_ii:
            return "K3-TypeII";
        case SnclKind::k3_type_iii:
            return "K3-TypeIII";
        case SnclKind::enriques_type_ii:
            return "Enriques-TypeII";
        case SnclKind::enriques_type_iii:
            return "Enriques-TypeIII";
    }
    return "?";
}

/// Combinatorial data of a degenerate K3 or Enriques surface: M components
/// (M1 with minimal model P^2, M2 ruled), m blow-downs to reach minimal
/// models, d double curves, T triple points, and for Type II the trace a of
/// the double elliptic curve.
struct SnclSurfaceData {
    SnclKind kind = SnclKind::k3_type_iii;
    std::uint64_t q = 0;
    long M = 0, M1 = 0, M2 = 0, m = 0, d = 0, T = 0;
    long trace = 0;

    bool is_type_ii() const { return kind == SnclKind::k3_type_ii || kind == SnclKind::enriques_type_ii; }
    bool is_k3() const { return kind == SnclKind::k3_type_ii || kind == SnclKind::k3_type_iii; }
};

inline bool within_hasse(long a, const Integer& q) { return Integer(a) * Integer(a) <= 4 * q; }

inline void validate(const SnclSurfaceData& s) {
    prime_power_decompose(s.q);
    for (long v : {s.M, s.M1, s.M2, s.m, s.d, s.T})
        if (v < 0) throw invalid_input("surface invariants must be nonnegative");
    if (s.M1 + s.M2 != s.M) throw invalid_input("M1 + M2 must equal M");
    const long euler = s.M - s.d + s.T;
    switch (s.kind) {
        case SnclKind::k3_type_iii:
            if (euler != 2)
                throw invalid_input("K3 Type III needs M - d + T = 2 (circle dual graph), got " + std::to_string(euler));
            break;
        case SnclKind::enriques_type_iii:
            if (euler != 1)
                throw invalid_input("Enriques Type III needs M - d + T = 1 (RP^2 dual graph), got " +
                                    std::to_string(euler));
            break;
        case SnclKind::k3_type_ii:
        case SnclKind::enriques_type_ii:
            if (s.T != 0 || s.d != s.M - 1)
                throw invalid_input("Type II needs a chain dual graph: T = 0 and d = M - 1");
            if (!within_hasse(s.trace, Integer(static_cast<unsigned long>(s.q))))
                throw invalid_input("trace " + std::to_string(s.trace) + " violates |a| <= 2 sqrt(q)");
            break;
    }
}

/// Non-fatal remarks on the data: odd triple-point counts in odd
/// characteristic are not expected to occur.
inline std::vector<std::string> sncl_warnings(const SnclSurfaceData& s) {
    std::vector<std::string> w;
    const auto [p, e] = prime_power_decompose(s.q);
    if (p != 2 && s.T % 2 != 0)
        w.push_back("T = " + std::to_string(s.T) + " is odd although p = " + std::to_string(p) +
                    " != 2; triple-point counts are expected to be even");
    return w;
}

namespace detail {
inline IntPoly elliptic_h1(long a, const Integer& q) { return IntPoly(std::vector<Integer>{1, Integer(-a), q}); }
}  // namespace detail

/// Zeta function of the underlying scheme of a degenerate K3 surface.
inline RationalZeta build_k3_zeta(const SnclSurfaceData& s) {
    if (!s.is_k3()) throw invalid_input("build_k3_zeta expects a K3 kind, got " + to_string(s.kind));
    validate(s);
    const Integer q(static_cast<unsigned long>(s.q));
    RationalZeta z;
    z.multiply(IntPoly::one_minus(1), s.kind == SnclKind::k3_type_ii ? -1 : -2);
    if (s.kind == SnclKind::k3_type_ii) {
        const IntPoly h1 = detail::elliptic_h1(s.trace, q);
        z.multiply(h1.scaled(q), s.M - 2);
        z.multiply(h1, -1);
        z.multiply(IntPoly::one_minus(q), -(s.M1 + 2 * s.M2 + s.M - 3 + s.m));
    } else {
        z.multiply(IntPoly::one_minus(q), -(s.M1 + 2 * s.M2 + s.m - s.d));
    }
    z.multiply(IntPoly::one_minus(q * q), -s.M);
    return z;
}

/// Zeta function of the underlying scheme of a degenerate classical Enriques
/// surface; characteristic 2 is excluded.
inline RationalZeta build_enriques_zeta(const SnclSurfaceData& s) {
    if (s.is_k3()) throw invalid_input("build_enriques_zeta expects an Enriques kind, got " + to_string(s.kind));
    validate(s);
    if (prime_power_decompose(s.q).first == 2) throw invalid_input("Enriques zeta builder requires p != 2");
    const Integer q(static_cast<unsigned long>(s.q));
    RationalZeta z;
    z.multiply(IntPoly::one_minus(1), -1);
    if (s.kind == SnclKind::enriques_type_ii) {
        z.multiply(detail::elliptic_h1(s.trace, q).scaled(q), s.M - 1);
        z.multiply(IntPoly::one_minus(q), -(s.M1 + 2 * s.M2 + s.M - 1 + s.m));
    } else {
        z.multiply(IntPoly::one_minus(q), -(s.M1 + 2 * s.M2 + s.m - s.d));
    }
    z.multiply(IntPoly::one_minus(q * q), -s.M);
    return z;
}

enum class LogZetaKind { k3_type_ii, k3_type_iii, enriques };

inline std::string to_string(LogZetaKind k) {
    switch (k) {
        case LogZetaKind::k3_type_ii:
            return "K3-TypeII";
        case LogZetaKind::k3_type_iii:
            return "K3-TypeIII";
        case LogZetaKind::enriques:
            return "Enriques";
    }
    return "?";
}

struct LogZeta {
    /// det(1 - tF | H^i restricted to N = 0), i = 0..4, as factored products.
    std::array<RationalZeta, 5> per_degree;
    /// prod_i per_degree[i]^{(-1)^{i+1}}
    RationalZeta zeta;

    /// Number of Frobenius eigenvalues on the degree-2 part.
    long h2_degree() const { return -per_degree[2].euler_characteristic(); }
};

/// Log-crystalline zeta function of a projective SNCL K3 or classical
/// Enriques surface over the log point of F_q.
inline LogZeta build_log_zeta(LogZetaKind kind, std::uint64_t q_value, std::optional<long> trace = std::nullopt) {
    prime_power_decompose(q_value);
    const Integer q(static_cast<unsigned long>(q_value));
    if (kind == LogZetaKind::k3_type_ii && !trace)
        throw invalid_input("K3 Type II needs the trace of the double elliptic curve");
    if (kind != LogZetaKind::k3_type_ii && trace)
        throw invalid_input("a trace is only meaningful for K3 Type II");
    if (trace && !within_hasse(*trace, q))
        throw invalid_input("trace " + std::to_string(*trace) + " violates |a| <= 2 sqrt(q)");

    LogZeta out;
    out.per_degree[0] = RationalZeta::factor(IntPoly::one_minus(1), 1);
    out.per_degree[4] = RationalZeta::factor(IntPoly::one_minus(q * q), 1);
    auto& h2 = out.per_degree[2];
    switch (kind) {
        case LogZetaKind::k3_type_ii:
            h2.multiply(detail::elliptic_h1(*trace, q), 1);
            h2.multiply(IntPoly::one_minus(q), 18);
            break;
        case LogZetaKind::k3_type_iii:
            h2.multiply(IntPoly::one_minus(1), 1);
            h2.multiply(IntPoly::one_minus(q), 19);
            break;
        case LogZetaKind::enriques:
            h2.multiply(IntPoly::one_minus(q), 10);
            break;
    }
    for (int i = 0; i <= 4; ++i) out.zeta = out.zeta * out.per_degree[i].pow(i % 2 == 0 ? -1 : 1);
    return out;
}

}  // namespace fqpoints
