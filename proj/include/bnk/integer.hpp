#ifndef BNK_INTEGER_HPP
#define BNK_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace bnk {

// Exact integer used throughout. No fixed-width arithmetic anywhere in the
// public types; machine-word values appear only as loop counters and bounds.
using Integer = mpz_class;

// gmpxx has no long long overloads; long is 64-bit on every supported
// platform, so bounds and enumerated cells convert losslessly.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Integer int_pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

// Exact quotient; q such that q*d == v. Caller guarantees divisibility.
inline Integer exact_div(const Integer& v, const Integer& d) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool divides(const Integer& d, const Integer& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace bnk

#endif
