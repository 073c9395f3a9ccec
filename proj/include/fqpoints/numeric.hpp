#pragma once

// Exact integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fqpoints {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input violates an operation's precondition.
class invalid_input : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a theorem's hypothesis is not met, so no claim can be checked.
class hypothesis_error : public invalid_input {
   public:
    using invalid_input::invalid_input;
};

/// Raised when a computed value breaks an invariant that must hold
/// mathematically (e.g. a non p-integral [p]-series).
class integrality_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

inline std::uint64_t upow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw invalid_input("isqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Floor division and non-negative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0) r += abs(m);
    return r;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

/// If q = p^e with p prime and e >= 1, returns (p, e).
inline std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    auto ps = prime_divisors(q);
    if (ps.size() != 1) throw invalid_input("not a prime power: " + std::to_string(q));
    unsigned e = 0;
    while (q > 1) {
        q /= ps[0];
        ++e;
    }
    return {ps[0], e};
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const Integer& n, unsigned long p) {
    if (sgn(n) == 0) throw invalid_input("valuation of zero");
    Integer m = abs(n);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

/// True when the reduced denominator is prime to p.
inline bool is_p_integral(const Rational& x, unsigned long p) {
    return !mpz_divisible_ui_p(x.get_den_mpz_t(), p);
}

/// Image of a p-integral rational in F_p, as an integer in [0, p).
inline std::uint64_t reduce_mod_p(const Rational& x, std::uint64_t p) {
    if (!is_p_integral(x, p))
        throw integrality_error("rational " + x.get_str() + " is not " + std::to_string(p) + "-integral");
    Integer P(static_cast<unsigned long>(p));
    Integer num = mod_nonneg(x.get_num(), P);
    Integer den = mod_nonneg(x.get_den(), P);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    Integer r = mod_nonneg(num * inv, P);
    return r.get_ui();
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) throw invalid_input("not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer parse_integer(const std::string& s) {
    Integer r;
    if (r.set_str(s, 10) != 0) throw invalid_input("not an integer: '" + s + "'");
    return r;
}

}  // namespace fqpoints
