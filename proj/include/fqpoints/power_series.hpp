#pragma once

// Truncated power series with exact rational coefficients.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace fqpoints {

/// sum_{n=0}^{order} c_n t^n, known exactly up to t^order.
class PowerSeriesQ {
   public:
    PowerSeriesQ() : coeffs_(1) {}
    explicit PowerSeriesQ(std::size_t order) : coeffs_(order + 1) {}

    /// The series t.
    static PowerSeriesQ identity(std::size_t order) {
        PowerSeriesQ s(order);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }

    static PowerSeriesQ constant(const Rational& c, std::size_t order) {
        PowerSeriesQ s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// Builds a series from sparse coefficients; indices above order are dropped.
    static PowerSeriesQ from_map(std::size_t order, const std::map<std::size_t, Rational>& terms) {
        PowerSeriesQ s(order);
        for (const auto& [n, c] : terms)
            if (n <= order) s.coeffs_[n] = c;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational coeff(std::size_t n) const { return n <= order() ? coeffs_[n] : Rational(0); }
    void set(std::size_t n, const Rational& c) { coeffs_.at(n) = c; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Index of the first nonzero coefficient, or order() + 1 for the zero series.
    std::size_t valuation() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (sgn(coeffs_[n]) != 0) return n;
        return coeffs_.size();
    }

    bool is_zero() const { return valuation() > order(); }

    PowerSeriesQ truncated(std::size_t order) const {
        PowerSeriesQ s(order);
        for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) s.coeffs_[n] = coeffs_[n];
        return s;
    }

    PowerSeriesQ operator+(const PowerSeriesQ& b) const {
        PowerSeriesQ s(std::min(order(), b.order()));
        for (std::size_t n = 0; n <= s.order(); ++n) s.coeffs_[n] = coeffs_[n] + b.coeffs_[n];
        return s;
    }

    PowerSeriesQ operator-(const PowerSeriesQ& b) const {
        PowerSeriesQ s(std::min(order(), b.order()));
        for (std::size_t n = 0; n <= s.order(); ++n) s.coeffs_[n] = coeffs_[n] - b.coeffs_[n];
        return s;
    }

    PowerSeriesQ operator*(const Rational& c) const {
        PowerSeriesQ s(*this);
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }

    PowerSeriesQ operator*(const PowerSeriesQ& b) const {
        const std::size_t N = std::min(order(), b.order());
        PowerSeriesQ s(N);
        const auto nza = nonzero_indices(N);
        const auto nzb = b.nonzero_indices(N);
        for (auto i : nza)
            for (auto j : nzb) {
                if (i + j > N) break;
                s.coeffs_[i + j] += coeffs_[i] * b.coeffs_[j];
            }
        return s;
    }

    bool operator==(const PowerSeriesQ& b) const { return coeffs_ == b.coeffs_; }
    bool operator!=(const PowerSeriesQ& b) const { return !(*this == b); }

    /// Renders nonzero terms as "c1*t + c5*t^5 - c7*t^7".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            const Rational& c = coeffs_[n];
            if (sgn(c) == 0) continue;
            if (first)
                os << c.get_str();
            else
                os << (sgn(c) < 0 ? " - " : " + ") << Rational(abs(c)).get_str();
            first = false;
            if (n == 1) os << "*t";
            if (n > 1) os << "*t^" << n;
        }
        if (first) os << '0';
        return os.str();
    }

   private:
    std::vector<std::size_t> nonzero_indices(std::size_t upto) const {
        std::vector<std::size_t> idx;
        for (std::size_t n = 0; n <= std::min(upto, order()); ++n)
            if (sgn(coeffs_[n]) != 0) idx.push_back(n);
        return idx;
    }

    std::vector<Rational> coeffs_;
};

/// f(g), truncated at min(order f, order g). Requires g(0) = 0.
inline PowerSeriesQ series_compose(const PowerSeriesQ& f, const PowerSeriesQ& g) {
    if (sgn(g[0]) != 0) throw invalid_input("compose: inner series must have zero constant term");
    const std::size_t N = std::min(f.order(), g.order());
    PowerSeriesQ out = PowerSeriesQ::constant(f[0], N);
    std::size_t last = 0;
    for (std::size_t i = 1; i <= N; ++i)
        if (sgn(f[i]) != 0) last = i;
    PowerSeriesQ power = PowerSeriesQ::constant(1, N);
    const PowerSeriesQ inner = g.truncated(N);
    for (std::size_t i = 1; i <= last; ++i) {
        power = power * inner;  // g^i has valuation >= i, so only N - i coefficients matter
        if (sgn(f[i]) == 0) continue;
        for (std::size_t n = i; n <= N; ++n)
            if (sgn(power[n]) != 0) out.set(n, out[n] + f[i] * power[n]);
    }
    return out;
}

/// Solves f(g) = rhs for g with g(0) = 0, coefficient by coefficient.
///
/// With g^i tracked incrementally, [t^n] g^i for i >= 2 only involves
/// g_1..g_{n-1}, so f_1 g_n = rhs_n - sum_{i>=2} f_i [t^n] g^i.
inline PowerSeriesQ solve_composition(const PowerSeriesQ& f, const PowerSeriesQ& rhs) {
    const std::size_t N = std::min(f.order(), rhs.order());
    if (N < 1) throw invalid_input("series order must be at least 1");
    if (sgn(f[0]) != 0 || sgn(rhs[0]) != 0) throw invalid_input("series must have zero constant term");
    if (sgn(f[1]) == 0) throw invalid_input("series is not invertible: linear coefficient is zero");

    // powers[i][n] = [t^n] g^i for 1 <= i <= n <= N
    std::vector<std::vector<Rational>> powers(N + 1, std::vector<Rational>(N + 1));
    auto& g = powers[1];
    const Rational f1_inv = 1 / f[1];
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t i = 2; i <= n; ++i) {
            Rational acc = 0;
            const auto& prev = powers[i - 1];
            for (std::size_t j = i - 1; j <= n - 1; ++j)
                if (sgn(prev[j]) != 0 && sgn(g[n - j]) != 0) acc += prev[j] * g[n - j];
            powers[i][n] = acc;
            if (sgn(f[i]) != 0 && sgn(acc) != 0) s += f[i] * acc;
        }
        g[n] = (rhs[n] - s) * f1_inv;
    }
    PowerSeriesQ out(N);
    for (std::size_t n = 1; n <= N; ++n) out.set(n, g[n]);
    return out;
}

/// Compositional inverse: reverse(f)(f(t)) = f(reverse(f)(t)) = t.
inline PowerSeriesQ series_reverse(const PowerSeriesQ& f) {
    return solve_composition(f, PowerSeriesQ::identity(f.order()));
}

/// Multiplicative inverse 1/f; requires f(0) != 0.
inline PowerSeriesQ series_inverse(const PowerSeriesQ& f) {
    if (sgn(f[0]) == 0) throw invalid_input("series inverse needs a nonzero constant term");
    const std::size_t N = f.order();
    PowerSeriesQ h(N);
    const Rational c0_inv = 1 / f[0];
    h.set(0, c0_inv);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (sgn(f[i]) != 0) s += f[i] * h[n - i];
        h.set(n, -s * c0_inv);
    }
    return h;
}

/// exp(L) for L(0) = 0, via n Z_n = sum_k k L_k Z_{n-k}.
inline PowerSeriesQ series_exp(const PowerSeriesQ& L) {
    if (sgn(L[0]) != 0) throw invalid_input("series exp needs a zero constant term");
    const std::size_t N = L.order();
    PowerSeriesQ z(N);
    z.set(0, 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (sgn(L[k]) != 0) s += Rational(static_cast<unsigned long>(k)) * L[k] * z[n - k];
        z.set(n, s / Rational(static_cast<unsigned long>(n)));
    }
    return z;
}

}  // namespace fqpoints
