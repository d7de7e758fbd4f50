#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagein {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// canonical form (gcd 1, positive denominator), which is exactly the
// invariant we need everywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// 2^e as an exact rational, e may be negative.
inline Rat pow2(long e) {
    Int n = 1;
    if (e >= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
        return Rat(n);
    }
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-e));
    return make_rat(Int(1), n);
}

// 10^e as an exact rational, e may be negative.
inline Rat pow10(long e) {
    Int n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10u, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rat(n) : make_rat(Int(1), n);
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Largest dyadic k/2^bits <= q (round_down) or smallest >= q (round_up).
inline Rat dyadic_floor(const Rat& q, unsigned bits) {
    Rat scaled = q * pow2(static_cast<long>(bits));
    return Rat(rat_floor(scaled)) * pow2(-static_cast<long>(bits));
}

inline Rat dyadic_ceil(const Rat& q, unsigned bits) {
    Rat scaled = q * pow2(static_cast<long>(bits));
    return Rat(rat_ceil(scaled)) * pow2(-static_cast<long>(bits));
}

inline std::string rat_string(const Rat& q) { return q.get_str(); }

// Parses "a", "a/b", "2^-k", or a decimal/scientific literal such as
// "1e-12" or "0.25" into an exact rational.
Rat parse_rat(const std::string& text);

// Decimal rendering with the given number of significant digits,
// suitable for tables. Exact rounding of the underlying rational.
std::string decimal_string(const Rat& q, int significant_digits);

// q in [lo,hi] with the smallest denominator (ties by smallest numerator).
// Requires lo <= hi.
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

}  // namespace flagein
