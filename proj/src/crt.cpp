#include "bnk/crt.hpp"

#include <sstream>
#include <stdexcept>

namespace bnk {

Decomposition decompose(const Integer& x) {
    if (x == 0) throw std::invalid_argument("decompose: x must be nonzero");
    unsigned long m = mpz_scan1(x.get_mpz_t(), 0);
    Integer odd_part;
    mpz_tdiv_q_2exp(odd_part.get_mpz_t(), x.get_mpz_t(), m);
    Integer y = (odd_part + 1) / 2;
    return {m, odd_part, y};
}

CrtCertificate lemma_pair(const Integer& x) {
    Decomposition d = decompose(x);
    CrtCertificate c;
    c.x = x;
    c.m = d.m;
    c.odd_part = d.odd_part;
    c.y = d.y;
    c.z = exact_div(int_pow2(2 * d.m + 1) + 1, 3);

    // b ≡ y (mod m1) and b ≡ z (mod m2); m1 odd and m2 a power of two are
    // coprime, so b is unique modulo m1*m2. Smallest non-negative residue.
    Integer m1 = abs(d.odd_part);
    Integer m2 = int_pow2(d.m);
    Integer r1 = ((d.y % m1) + m1) % m1;
    if (m2 == 1) {
        c.b = r1;
    } else {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
            throw std::logic_error("lemma_pair: moduli not coprime");
        Integer t = ((c.z - r1) * inv) % m2;
        t = ((t % m2) + m2) % m2;
        c.b = r1 + m1 * t;
    }
    c.a = exact_div((2 * c.b - 1) * (3 * c.b - 1), x);
    return c;
}

bool verify_certificate(const CrtCertificate& c) {
    if (c.x == 0) return false;
    if (!is_odd(c.odd_part)) return false;
    Integer pow_m = int_pow2(c.m);
    if (c.odd_part * pow_m != c.x) return false;
    if (2 * c.y - 1 != c.odd_part) return false;
    if (3 * c.z != int_pow2(2 * c.m + 1) + 1) return false;
    if (!divides(c.odd_part, 2 * c.b - 1)) return false;
    if (!divides(pow_m, 3 * c.b - 1)) return false;
    if (c.a * c.x != (2 * c.b - 1) * (3 * c.b - 1)) return false;
    if (c.b < 0 || c.b >= abs(c.odd_part) * pow_m) return false;
    return true;
}

std::string format_certificate(const CrtCertificate& c) {
    std::ostringstream out;
    out << "x: " << c.x << '\n'
        << "m: " << c.m << '\n'
        << "odd_part: " << c.odd_part << '\n'
        << "y: " << c.y << '\n'
        << "z: " << c.z << '\n'
        << "b: " << c.b << '\n'
        << "a: " << c.a << '\n';
    return out.str();
}

}  // namespace bnk
