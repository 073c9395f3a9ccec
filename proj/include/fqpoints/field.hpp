#pragma once

// Finite fields F_{p^e} in a polynomial basis over F_p.
//
// Elements are handled internally as a packed index sum_i c_i p^i, where
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} is the representative modulo the
// field's modulus. For fields of at most 2^16 elements, discrete log /
// antilog tables and a Zech table are built so that multiplication is one
// addition of logarithms.

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "numeric.hpp"

namespace fqpoints {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

/// Requested field (or enumeration) size exceeds the configured bound.
class field_bound_error : public invalid_input {
   public:
    field_bound_error(std::string what, Integer requested, std::uint64_t bound)
        : invalid_input(std::move(what)), requested_(std::move(requested)), bound_(bound) {}
    const Integer& requested() const noexcept { return requested_; }
    std::uint64_t bound() const noexcept { return bound_; }

   private:
    Integer requested_;
    std::uint64_t bound_;
};

namespace detail {

// Dense polynomials over F_p, coefficient i is the coefficient of x^i.
using PolyFp = std::vector<std::uint64_t>;

inline void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyFp poly_mod(PolyFp a, const PolyFp& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = [&] {
        Integer inv;
        Integer lead(static_cast<unsigned long>(f.back())), P(static_cast<unsigned long>(p));
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), P.get_mpz_t());
        return static_cast<std::uint64_t>(inv.get_ui());
    }();
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

inline PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), f, p);
}

inline PolyFp poly_powmod(PolyFp base, std::uint64_t n, const PolyFp& f, std::uint64_t p) {
    PolyFp r{1};
    base = poly_mod(std::move(base), f, p);
    while (n) {
        if (n & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        n >>= 1;
    }
    return r;
}

inline PolyFp poly_gcd(PolyFp a, PolyFp b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or test: f of degree e is irreducible iff gcd(x^{p^i} - x, f) = 1
/// for 1 <= i <= e/2.
inline bool is_irreducible(const PolyFp& f, std::uint64_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    if (f[0] == 0) return false;
    PolyFp h{0, 1};
    for (std::size_t i = 1; i <= e / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        PolyFp diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        if (poly_gcd(diff, f, p).size() != 1) return false;
    }
    return true;
}

}  // namespace detail

class FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

Field field_make(std::uint64_t p, unsigned e, std::uint64_t bound = kDefaultFieldBound);

/// The field F_{p^e}. Immutable after construction, so one instance can be
/// shared across threads.
class FieldDescriptor {
   public:
    using Index = std::uint32_t;

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    std::uint64_t size() const noexcept { return q_; }
    /// Monic modulus, coefficient i is the coefficient of x^i (length e + 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    Index generator() const noexcept { return generator_; }
    bool has_log_tables() const noexcept { return !log_.empty(); }

    Index zero() const noexcept { return 0; }
    Index one() const noexcept { return 1; }

    std::vector<std::uint64_t> coeffs(Index a) const {
        std::vector<std::uint64_t> c(e_);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a = static_cast<Index>(a / p_);
        }
        return c;
    }

    Index from_coeffs(std::span<const std::uint64_t> c) const {
        if (c.size() > e_) throw invalid_input("too many coefficients for F_" + std::to_string(q_));
        std::uint64_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i] % p_;
        return static_cast<Index>(idx);
    }

    /// Image of an integer under Z -> F_q.
    Index from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<Index>(r);
    }

    Index add(Index a, Index b) const noexcept {
        if (e_ == 1) return static_cast<Index>((a + std::uint64_t{b}) % p_);
        if (p_ == 2) return a ^ b;
        std::uint64_t r = 0;
        for (unsigned i = 0; i < e_; ++i) {
            const std::uint64_t d = (a % p_ + b % p_) % p_;
            r += d * pow_p_[i];
            a = static_cast<Index>(a / p_);
            b = static_cast<Index>(b / p_);
        }
        return static_cast<Index>(r);
    }

    Index neg(Index a) const noexcept {
        if (e_ == 1) return a == 0 ? 0 : static_cast<Index>(p_ - a);
        if (p_ == 2) return a;
        std::uint64_t r = 0;
        for (unsigned i = 0; i < e_; ++i) {
            const std::uint64_t d = a % p_;
            r += ((p_ - d) % p_) * pow_p_[i];
            a = static_cast<Index>(a / p_);
        }
        return static_cast<Index>(r);
    }

    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

    Index mul(Index a, Index b) const {
        if (a == 0 || b == 0) return 0;
        if (e_ == 1) return static_cast<Index>(std::uint64_t{a} * b % p_);
        if (!log_.empty()) {
            std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
            if (s >= q_ - 1) s -= q_ - 1;
            return exp_[s];
        }
        return to_index(detail::poly_mulmod(to_poly(a), to_poly(b), modulus_, p_));
    }

    Index pow(Index a, std::uint64_t n) const {
        Index r = 1;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    Index inv(Index a) const {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
        if (!log_.empty() && a != 1) return exp_[(q_ - 1) - log_[a]];
        return pow(a, q_ - 2);
    }

    Index div(Index a, Index b) const { return mul(a, inv(b)); }

    Index frobenius(Index a) const { return pow(a, p_); }

    /// generator^k for any integer k (negative k allowed).
    Index gen_pow(std::int64_t k) const {
        const std::int64_t m = static_cast<std::int64_t>(q_ - 1);
        std::int64_t r = k % m;
        if (r < 0) r += m;
        return pow(generator_, static_cast<std::uint64_t>(r));
    }

    /// Discrete logarithm to base generator (table-backed fields only).
    std::uint32_t log(Index a) const {
        if (log_.empty()) throw invalid_input("log tables are only built for fields of at most 2^16 elements");
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }

    /// Zech logarithm Z(n) with g^Z(n) = 1 + g^n; returns -1 when 1 + g^n = 0.
    std::int64_t zech(std::uint32_t n) const {
        if (zech_.empty()) throw invalid_input("Zech table is only built for fields of at most 2^16 elements");
        return zech_[n % (q_ - 1)];
    }

    /// g^a + g^b computed purely on logarithms; -1 encodes the zero element.
    std::int64_t zech_add(std::uint32_t a, std::uint32_t b) const {
        const std::uint64_t m = q_ - 1;
        const std::uint32_t diff = static_cast<std::uint32_t>((b + m - a % m) % m);
        const std::int64_t z = zech(diff);
        if (z < 0) return -1;
        return static_cast<std::int64_t>((a + static_cast<std::uint64_t>(z)) % m);
    }

   private:
    friend Field field_make(std::uint64_t, unsigned, std::uint64_t);
    FieldDescriptor() = default;

    detail::PolyFp to_poly(Index a) const {
        detail::PolyFp c(coeffs(a));
        detail::trim(c);
        return c;
    }
    Index to_index(const detail::PolyFp& c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i];
        return static_cast<Index>(idx);
    }

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> pow_p_;
    Index generator_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Index> exp_;
    std::vector<std::int64_t> zech_;
};

/// Builds F_{p^e} with the lexicographically smallest monic irreducible
/// modulus (ordered by the packed index of its lower coefficients) and the
/// smallest element of multiplicative order p^e - 1 as generator.
inline Field field_make(std::uint64_t p, unsigned e, std::uint64_t bound) {
    if (!is_prime(p)) throw invalid_input("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw invalid_input("field degree must be at least 1");
    const Integer requested = ipow(Integer(static_cast<unsigned long>(p)), e);
    if (requested > Integer(static_cast<unsigned long>(bound)))
        throw field_bound_error("field size " + std::to_string(p) + "^" + std::to_string(e) + " = " +
                                    requested.get_str() + " exceeds the bound " + std::to_string(bound),
                                requested, bound);

    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->p_ = p;
    f->e_ = e;
    f->q_ = upow(p, e);
    f->pow_p_.resize(e);
    for (unsigned i = 0; i < e; ++i) f->pow_p_[i] = upow(p, i);

    for (std::uint64_t low = 0; low < f->q_; ++low) {
        detail::PolyFp cand(e + 1);
        std::uint64_t t = low;
        for (unsigned i = 0; i < e; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        cand[e] = 1;
        if (detail::is_irreducible(cand, p)) {
            f->modulus_ = std::move(cand);
            break;
        }
    }
    if (f->modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

    const std::uint64_t order = f->q_ - 1;
    const auto primes = prime_divisors(order);
    bool found = order == 1;
    if (found) f->generator_ = 1;
    for (std::uint64_t cand = 1; cand < f->q_ && !found; ++cand) {
        const auto g = static_cast<FieldDescriptor::Index>(cand);
        bool ok = true;
        for (auto r : primes)
            if (f->pow(g, order / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            f->generator_ = g;
            found = true;
        }
    }
    if (!found || f->pow(f->generator_, order) != 1) throw std::logic_error("generator verification failed");

    if (f->q_ <= kLogTableLimit) {
        std::vector<FieldDescriptor::Index> exp_table(order);
        std::vector<std::uint32_t> log_table(f->q_, 0);
        FieldDescriptor::Index x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            exp_table[i] = x;
            log_table[x] = static_cast<std::uint32_t>(i);
            x = f->mul(x, f->generator_);
        }
        std::vector<std::int64_t> zech_table(order);
        for (std::uint64_t n = 0; n < order; ++n) {
            const auto s = f->add(1, exp_table[n]);
            zech_table[n] = s == 0 ? -1 : static_cast<std::int64_t>(log_table[s]);
        }
        f->exp_ = std::move(exp_table);
        f->log_ = std::move(log_table);
        f->zech_ = std::move(zech_table);
    }
    return f;
}

/// An element of a finite field, bound to its owning descriptor.
class FieldElement {
   public:
    using Index = FieldDescriptor::Index;

    FieldElement(Field owner, Index index) : owner_(std::move(owner)), index_(index) {
        if (!owner_) throw invalid_input("field element without a field");
        if (index_ >= owner_->size()) throw invalid_input("element index out of range");
    }

    static FieldElement from_int(const Field& f, std::int64_t n) { return {f, f->from_int(n)}; }
    static FieldElement generator(const Field& f) { return {f, f->generator()}; }

    const Field& field() const noexcept { return owner_; }
    Index index() const noexcept { return index_; }
    std::vector<std::uint64_t> coeffs() const { return owner_->coeffs(index_); }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement operator+(const FieldElement& b) const { return {owner_, owner_->add(index_, same(b))}; }
    FieldElement operator-(const FieldElement& b) const { return {owner_, owner_->sub(index_, same(b))}; }
    FieldElement operator*(const FieldElement& b) const { return {owner_, owner_->mul(index_, same(b))}; }
    FieldElement operator/(const FieldElement& b) const { return {owner_, owner_->div(index_, same(b))}; }
    FieldElement operator-() const { return {owner_, owner_->neg(index_)}; }

    FieldElement inverse() const { return {owner_, owner_->inv(index_)}; }
    FieldElement pow(std::int64_t n) const {
        if (n < 0) return inverse().pow(-n);
        return {owner_, owner_->pow(index_, static_cast<std::uint64_t>(n))};
    }
    FieldElement frobenius() const { return {owner_, owner_->frobenius(index_)}; }

    bool operator==(const FieldElement& b) const { return index_ == same(b); }
    bool operator!=(const FieldElement& b) const { return !(*this == b); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
        const auto c = a.coeffs();
        bool first = true;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!first) os << '+';
            first = false;
            if (i == 0 || c[i] != 1) os << c[i];
            if (i > 0) os << (c[i] != 1 ? "*x" : "x");
            if (i > 1) os << '^' << i;
        }
        if (first) os << '0';
        return os;
    }

   private:
    Index same(const FieldElement& b) const {
        if (owner_ != b.owner_ &&
            (owner_->characteristic() != b.owner_->characteristic() || owner_->degree() != b.owner_->degree()))
            throw invalid_input("arithmetic between elements of different fields");
        return b.index_;
    }

    Field owner_;
    Index index_;
};

/// All p^e elements, zero first, ordered by packed index (lexicographic on
/// the coefficient vector read from the top coefficient down).
inline std::vector<FieldElement> enumerate(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f->size());
    for (std::uint64_t i = 0; i < f->size(); ++i) out.emplace_back(f, static_cast<FieldElement::Index>(i));
    return out;
}

/// generator^k, resolved in whichever field a coefficient is evaluated in.
struct GenPow {
    std::int64_t k = 0;
    bool operator==(const GenPow&) const = default;
};

/// A coefficient: an integer (its image in F_q) or a power of the generator.
using CoeffSpec = std::variant<std::int64_t, GenPow>;

inline FieldDescriptor::Index resolve(const CoeffSpec& c, const FieldDescriptor& f) {
    if (const auto* n = std::get_if<std::int64_t>(&c)) return f.from_int(*n);
    return f.gen_pow(std::get<GenPow>(c).k);
}

inline std::string to_string(const CoeffSpec& c) {
    if (const auto* n = std::get_if<std::int64_t>(&c)) return std::to_string(*n);
    return "g^" + std::to_string(std::get<GenPow>(c).k);
}

}  // namespace fqpoints
