#ifndef BNK_CRT_HPP
#define BNK_CRT_HPP

#include <string>

#include "bnk/integer.hpp"

namespace bnk {

// Witness that a*x = (2b-1)(3b-1): the 2-adic decomposition of x, the two
// congruence targets, and the resulting pair (a, b).
struct CrtCertificate {
    Integer x;          // nonzero input
    unsigned long m;    // 2-adic valuation of x
    Integer odd_part;   // x / 2^m, odd, same sign as x
    Integer y;          // 2y - 1 = odd_part
    Integer z;          // (2^(2m+1) + 1) / 3
    Integer b;          // canonical residue: b ≡ y (mod |odd_part|), b ≡ z (mod 2^m)
    Integer a;          // (2b-1)(3b-1) / x, exact
};

struct Decomposition {
    unsigned long m;
    Integer odd_part;
    Integer y;
};

// x = odd_part * 2^m with odd_part odd; y solves 2y - 1 = odd_part.
// Throws std::invalid_argument when x = 0.
Decomposition decompose(const Integer& x);

// Constructs the pair (a, b) with a*x = (2b-1)(3b-1). b is the smallest
// non-negative solution of the two congruences; the moduli |odd_part| and
// 2^m are coprime, so it is unique in [0, |odd_part|*2^m).
// Throws std::invalid_argument when x = 0.
CrtCertificate lemma_pair(const Integer& x);

// Exact check of every certificate invariant; false on any violation.
bool verify_certificate(const CrtCertificate& c);

// key: value lines (x, m, odd_part, y, z, b, a), decimal.
std::string format_certificate(const CrtCertificate& c);

}  // namespace bnk

#endif
