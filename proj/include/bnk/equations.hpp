#ifndef BNK_EQUATIONS_HPP
#define BNK_EQUATIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "bnk/tuple.hpp"

namespace bnk {

// The three named quartic equations searched by this tool:
//   SierpinskiQ1: x^2(x+1)^2 + y^2(y+1)^2 = z^2(z+1)^2, variables >= 1
//   ShiftedQ2:    (x+14)^2(x+16)^2 + y^2(y+2)^2 = z^2(z+2)^2, variables >= 1
//   SquaresM1:    (x^2-1)^2 + (y^2-1)^2 = (z^2-1)^2, variables >= 2
enum class NamedEquation { SierpinskiQ1, ShiftedQ2, SquaresM1 };

long long equation_floor(NamedEquation eq);
std::string equation_name(NamedEquation eq);

struct EqTriple {
    long long x = 0, y = 0, z = 0;
    auto operator<=>(const EqTriple&) const = default;
};

// All solutions with floor <= x, y, z <= bound, sorted lexicographically.
// Tabulates the z-side values once and probes (x, y) pairs; exact integer
// keys throughout. bound >= floor or std::invalid_argument.
std::vector<EqTriple> search_equation(NamedEquation eq, long long bound,
                                      int threads = 1);

// The bundled reference tuples exercised by the CLI `paper` subcommand.
enum class BuiltinTuple { Theorem1_20, Theorem2_17, B13Pos, B15Nat };

IntTuple paper_tuple(BuiltinTuple which);

// Completes a solution of SierpinskiQ1 (any integer signs, with
// x(x+1)y(y+1) != 0) into a total assignment over 1..20 following the
// Theorem1_20 slot pattern; slots 14-19 come from lemma_pair(slot 13).
// The result satisfies extract(paper_tuple(Theorem1_20)). Throws
// std::invalid_argument naming the failed precondition.
Assignment complete_witness_theorem1(const Integer& x, const Integer& y,
                                     const Integer& z);

}  // namespace bnk

#endif
