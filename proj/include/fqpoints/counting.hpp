#pragma once

// Rational-point counting over F_{q^k}: brute-force projective enumeration,
// a histogram-convolution fast path for diagonal forms, and closed forms for
// the stratified combinatorial examples (n-gons, blow-up chains).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "field.hpp"
#include "numeric.hpp"

namespace fqpoints {

struct Term {
    std::vector<unsigned> exps;
    CoeffSpec coeff = std::int64_t{1};
};

struct HomogeneousPoly {
    unsigned degree = 0;
    std::vector<Term> terms;
};

/// Homogeneous polynomials in the coordinates T_0..T_n of P^n.
struct PolySystem {
    unsigned ambient = 0;
    std::vector<HomogeneousPoly> polys;

    unsigned total_degree() const {
        unsigned s = 0;
        for (const auto& f : polys) s += f.degree;
        return s;
    }

    void validate() const {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (const auto& t : polys[i].terms) {
                if (t.exps.size() != ambient + 1)
                    throw invalid_input("polynomial " + std::to_string(i) + ": exponent vector of length " +
                                        std::to_string(t.exps.size()) + ", expected " + std::to_string(ambient + 1));
                const unsigned deg = std::accumulate(t.exps.begin(), t.exps.end(), 0u);
                if (deg != polys[i].degree)
                    throw invalid_input("polynomial " + std::to_string(i) + " is not homogeneous of degree " +
                                        std::to_string(polys[i].degree));
            }
        }
    }
};

/// a_0 T_0^d + ... + a_{n-1} T_{n-1}^d in P^{n-1}.
struct DiagonalForm {
    unsigned d = 1;
    std::vector<CoeffSpec> coeffs;

    void validate() const {
        if (d < 1) throw invalid_input("diagonal form degree must be at least 1");
        if (coeffs.size() < 2) throw invalid_input("diagonal form needs at least two variables");
    }

    PolySystem to_system() const {
        validate();
        const auto n = static_cast<unsigned>(coeffs.size());
        HomogeneousPoly f{d, {}};
        for (unsigned i = 0; i < n; ++i) {
            Term t;
            t.exps.assign(n, 0);
            t.exps[i] = d;
            t.coeff = coeffs[i];
            f.terms.push_back(std::move(t));
        }
        return PolySystem{n - 1, {std::move(f)}};
    }
};

/// Point counts of Y^(i), the disjoint union of (i+1)-fold intersections.
using StrataCounts = std::vector<Integer>;

struct CountOptions {
    unsigned threads = 1;
    std::uint64_t field_bound = kDefaultFieldBound;
    /// Maximum number of coordinate vectors a brute-force count may visit.
    std::uint64_t enumeration_bound = std::uint64_t{1} << 36;
};

namespace detail {

inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 14;

/// Splits [0, total) into fixed-size chunks, evaluates them on up to
/// `threads` workers and folds the per-chunk results in chunk order.
inline Integer chunked_sum(std::uint64_t total, unsigned threads,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& chunk) {
    const std::uint64_t nchunks = ceil_div(total, kChunkSize);
    std::vector<std::uint64_t> partial(nchunks, 0);
    auto worker = [&](std::uint64_t first) {
        for (std::uint64_t c = first; c < nchunks; c += std::max(1u, threads)) {
            const std::uint64_t b = c * kChunkSize;
            partial[c] = chunk(b, std::min(total, b + kChunkSize));
        }
    };
    if (threads <= 1 || nchunks <= 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads && t < nchunks; ++t) pool.emplace_back(worker, t);
    }
    Integer sum = 0;
    for (auto v : partial) sum += Integer(static_cast<unsigned long>(v));
    return sum;
}

struct CompiledTerm {
    FieldDescriptor::Index coeff;
    std::vector<std::pair<unsigned, unsigned>> factors;  // (variable, exponent)
};

class CompiledSystem {
   public:
    CompiledSystem(const PolySystem& sys, const FieldDescriptor& f) : f_(f), nvars_(sys.ambient + 1) {
        for (const auto& poly : sys.polys) {
            std::vector<CompiledTerm> terms;
            for (const auto& t : poly.terms) {
                CompiledTerm ct{resolve(t.coeff, f), {}};
                if (ct.coeff == 0) continue;
                for (unsigned v = 0; v < t.exps.size(); ++v)
                    if (t.exps[v] > 0) ct.factors.emplace_back(v, t.exps[v]);
                maxdeg_ = std::max(maxdeg_, poly.degree);
                terms.push_back(std::move(ct));
            }
            polys_.push_back(std::move(terms));
        }
        stride_ = maxdeg_ + 1;
        powers_.resize(f.size() * stride_);
        for (std::uint64_t x = 0; x < f.size(); ++x) {
            FieldDescriptor::Index acc = 1;
            for (unsigned j = 0; j <= maxdeg_; ++j) {
                powers_[x * stride_ + j] = acc;
                acc = f.mul(acc, static_cast<FieldDescriptor::Index>(x));
            }
        }
    }

    unsigned variables() const noexcept { return nvars_; }

    bool vanishes(const std::vector<FieldDescriptor::Index>& pt) const {
        for (const auto& terms : polys_) {
            FieldDescriptor::Index acc = 0;
            for (const auto& t : terms) {
                FieldDescriptor::Index v = t.coeff;
                for (auto [var, ex] : t.factors) v = f_.mul(v, powers_[pt[var] * stride_ + ex]);
                acc = f_.add(acc, v);
            }
            if (acc != 0) return false;
        }
        return true;
    }

   private:
    const FieldDescriptor& f_;
    unsigned nvars_;
    unsigned maxdeg_ = 0;
    std::size_t stride_ = 1;
    std::vector<std::vector<CompiledTerm>> polys_;
    std::vector<FieldDescriptor::Index> powers_;
};

/// Counts zeros among coordinate vectors whose last `free` coordinates run
/// over F_q and whose leading coordinates are fixed to `prefix`.
inline Integer count_zeros(const CompiledSystem& sys, std::uint64_t q,
                           const std::vector<FieldDescriptor::Index>& prefix, unsigned free, unsigned threads) {
    const std::uint64_t total = upow(q, free);
    return chunked_sum(total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<FieldDescriptor::Index> pt(prefix);
        pt.resize(prefix.size() + free);
        std::uint64_t idx = begin;
        for (unsigned i = 0; i < free; ++i) {
            pt[pt.size() - 1 - i] = static_cast<FieldDescriptor::Index>(idx % q);
            idx /= q;
        }
        std::uint64_t hits = 0;
        for (std::uint64_t it = begin; it < end; ++it) {
            if (sys.vanishes(pt)) ++hits;
            for (std::size_t pos = pt.size(); pos-- > prefix.size();) {
                if (++pt[pos] < q) break;
                pt[pos] = 0;
            }
        }
        return hits;
    });
}

inline Field counting_field(std::uint64_t p, unsigned e, unsigned k, const CountOptions& opts) {
    if (k == 0) throw invalid_input("extension degree k must be at least 1");
    return field_make(p, e * k, opts.field_bound);
}

inline void check_enumeration(std::uint64_t q, unsigned vars, const CountOptions& opts) {
    const Integer total = ipow(Integer(static_cast<unsigned long>(q)), vars);
    if (total > Integer(static_cast<unsigned long>(opts.enumeration_bound)))
        throw field_bound_error("brute-force enumeration of " + total.get_str() + " points exceeds the bound " +
                                    std::to_string(opts.enumeration_bound),
                                total, opts.enumeration_bound);
}

}  // namespace detail

/// #{x in P^n(F_{q^k}) : every polynomial of the system vanishes at x}.
///
/// A single form is counted through its affine cone, (#zeros - 1)/(q^k - 1);
/// other systems enumerate the canonical representatives whose first nonzero
/// coordinate is 1.
inline Integer count_projective(const PolySystem& system, std::uint64_t p, unsigned e, unsigned k,
                                const CountOptions& opts = {}) {
    system.validate();
    const Field f = detail::counting_field(p, e, k, opts);
    const std::uint64_t q = f->size();
    const unsigned nvars = system.ambient + 1;
    detail::check_enumeration(q, nvars, opts);
    const detail::CompiledSystem compiled(system, *f);

    if (system.polys.size() == 1) {
        const Integer zeros = detail::count_zeros(compiled, q, {}, nvars, opts.threads);
        const Integer qm1(static_cast<unsigned long>(q - 1));
        const Integer nonzero = zeros - 1;
        if (!mpz_divisible_p(nonzero.get_mpz_t(), qm1.get_mpz_t()))
            throw std::logic_error("affine cone count is not divisible by q - 1");
        return nonzero / qm1;
    }

    Integer total = 0;
    for (unsigned lead = 0; lead < nvars; ++lead) {
        std::vector<FieldDescriptor::Index> prefix(lead, 0);
        prefix.push_back(1);
        total += detail::count_zeros(compiled, q, prefix, nvars - lead - 1, opts.threads);
    }
    return total;
}

/// Number of solutions of a single form on the affine cone, used by tests to
/// check exact divisibility by q^k - 1.
inline Integer count_affine_cone(const PolySystem& system, std::uint64_t p, unsigned e, unsigned k,
                                 const CountOptions& opts = {}) {
    system.validate();
    const Field f = detail::counting_field(p, e, k, opts);
    detail::check_enumeration(f->size(), system.ambient + 1, opts);
    const detail::CompiledSystem compiled(system, *f);
    return detail::count_zeros(compiled, f->size(), {}, system.ambient + 1, opts.threads);
}

namespace detail {

// Histogram convolution in the group algebra of (F_q, +). Count is either
// std::uint64_t (when q^n cannot overflow) or Integer.
template <class Count>
Count diagonal_zero_count(const FieldDescriptor& f, const std::vector<std::vector<std::uint64_t>>& hist) {
    const std::uint64_t q = f.size();
    std::vector<Count> acc(q, Count(0));
    for (std::uint64_t c = 0; c < q; ++c) acc[c] = Count(hist[0][c]);

    auto support = [q](const auto& v) {
        std::vector<FieldDescriptor::Index> s;
        for (std::uint64_t c = 0; c < q; ++c)
            if (v[c] != 0) s.push_back(static_cast<FieldDescriptor::Index>(c));
        return s;
    };

    for (std::size_t i = 1; i + 1 < hist.size(); ++i) {
        std::vector<Count> next(q, Count(0));
        const auto sa = support(acc);
        const auto sb = support(hist[i]);
        for (auto a : sa)
            for (auto b : sb) next[f.add(a, b)] += acc[a] * Count(hist[i][b]);
        acc = std::move(next);
    }
    const auto& last = hist.back();
    Count zeros(0);
    for (std::uint64_t a = 0; a < q; ++a) {
        if (acc[a] == 0) continue;
        zeros += acc[a] * Count(last[f.neg(static_cast<FieldDescriptor::Index>(a))]);
    }
    return zeros;
}

}  // namespace detail

/// Point count of a diagonal form over F_{q^k} by convolving per-variable
/// histograms v_i[c] = #{x : a_i x^d = c}.
inline Integer count_diagonal(const DiagonalForm& form, std::uint64_t p, unsigned e, unsigned k,
                              const CountOptions& opts = {}) {
    form.validate();
    const Field f = detail::counting_field(p, e, k, opts);
    const std::uint64_t q = f->size();

    std::vector<FieldDescriptor::Index> dth(q);
    for (std::uint64_t x = 0; x < q; ++x) dth[x] = f->pow(static_cast<FieldDescriptor::Index>(x), form.d);

    std::vector<std::vector<std::uint64_t>> hist;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
        const auto a = resolve(form.coeffs[i], *f);
        if (a == 0)
            throw invalid_input("coefficient " + std::to_string(i) + " (" + to_string(form.coeffs[i]) +
                                ") vanishes in F_" + std::to_string(q));
        std::vector<std::uint64_t> v(q, 0);
        for (std::uint64_t x = 0; x < q; ++x) ++v[f->mul(a, dth[x])];
        hist.push_back(std::move(v));
    }

    Integer zeros;
    const Integer worst = ipow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned long>(hist.size()));
    if (worst < Integer("9223372036854775807"))
        zeros = Integer(static_cast<unsigned long>(detail::diagonal_zero_count<std::uint64_t>(*f, hist)));
    else
        zeros = detail::diagonal_zero_count<Integer>(*f, hist);

    const Integer qm1(static_cast<unsigned long>(q - 1));
    const Integer nonzero = zeros - 1;
    if (!mpz_divisible_p(nonzero.get_mpz_t(), qm1.get_mpz_t()))
        throw std::logic_error("diagonal cone count is not divisible by q - 1");
    return nonzero / qm1;
}

/// True iff every nonempty subset of the resolved coefficients has nonzero
/// sum in F_q. Expects exactly q - 1 nonzero coefficients.
inline bool xq_condition(const std::vector<CoeffSpec>& coeffs, std::uint64_t p, unsigned e,
                         std::uint64_t bound = kDefaultFieldBound) {
    const Field f = field_make(p, e, bound);
    const std::uint64_t q = f->size();
    if (coeffs.size() != q - 1)
        throw invalid_input("expected " + std::to_string(q - 1) + " coefficients, got " +
                            std::to_string(coeffs.size()));
    // reachable[c]: some nonempty subset of the coefficients seen so far sums to c
    std::vector<char> reachable(q, 0);
    for (const auto& c : coeffs) {
        const auto a = resolve(c, *f);
        if (a == 0) throw invalid_input("coefficient " + to_string(c) + " vanishes in F_" + std::to_string(q));
        std::vector<char> next(reachable);
        next[a] = 1;
        for (std::uint64_t s = 0; s < q; ++s)
            if (reachable[s]) next[f->add(static_cast<FieldDescriptor::Index>(s), a)] = 1;
        reachable = std::move(next);
    }
    return !reachable[0];
}

inline Integer field_order(std::uint64_t p, unsigned e, unsigned k) {
    if (!is_prime(p)) throw invalid_input("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0 || k == 0) throw invalid_input("field degree must be at least 1");
    return ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(e) * k);
}

/// #P^N(F_Q) = 1 + Q + ... + Q^N.
inline Integer projective_space_count(unsigned N, const Integer& Q) {
    Integer s = 0, pw = 1;
    for (unsigned i = 0; i <= N; ++i) {
        s += pw;
        pw *= Q;
    }
    return s;
}

/// Alternating sum over the strata: sum_i (-1)^i #Y^(i).
inline Integer count_from_strata(const StrataCounts& strata) {
    Integer s = 0;
    for (std::size_t i = 0; i < strata.size(); ++i) {
        if (i % 2 == 0)
            s += strata[i];
        else
            s -= strata[i];
    }
    return s;
}

/// Cycle of n projective lines meeting transversally in n points:
/// n(Q + 1) - n = nQ.
inline Integer count_ngon(unsigned n, std::uint64_t p, unsigned e, unsigned k) {
    if (n < 1) throw invalid_input("an n-gon needs n >= 1");
    const Integer Q = field_order(p, e, k);
    return Integer(n) * (Q + 1) - Integer(n);
}

inline StrataCounts ngon_strata(unsigned n, const Integer& Q) {
    return {Integer(n) * projective_space_count(1, Q), Integer(n)};
}

/// Special fiber of the iterated blow-up of P^N along a hyperplane: one P^N
/// and n - 1 copies of P^{N-1} x P^1 glued in a chain along n - 1 copies of
/// P^{N-1}. Closed form (Q^{N+1}-1)/(Q-1) + (n-1) Q (Q^N-1)/(Q-1).
inline Integer count_chain(unsigned N, unsigned n, std::uint64_t p, unsigned e, unsigned k) {
    if (N < 1 || n < 1) throw invalid_input("blow-up chain needs N >= 1 and n >= 1");
    const Integer Q = field_order(p, e, k);
    const Integer QN = ipow(Q, N);
    return (QN * Q - 1) / (Q - 1) + Integer(n - 1) * Q * (QN - 1) / (Q - 1);
}

inline StrataCounts chain_strata(unsigned N, unsigned n, const Integer& Q) {
    const Integer pn1 = projective_space_count(N - 1, Q);
    return {projective_space_count(N, Q) + Integer(n - 1) * pn1 * projective_space_count(1, Q),
            Integer(n - 1) * pn1};
}

}  // namespace fqpoints
