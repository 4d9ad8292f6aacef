#ifndef BNK_RELATIONS_HPP
#define BNK_RELATIONS_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnk/tuple.hpp"

namespace bnk {

// Index triple of a relation x_i + x_j = x_k or x_i * x_j = x_k, 1-based,
// stored canonically with i <= j.
struct Triple {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const Triple&) const = default;
};

// The unit/additive/multiplicative relations a tuple satisfies.
struct RelationSystem {
    int n = 0;
    std::set<int> units;      // x_i = 1
    std::set<Triple> adds;    // x_i + x_j = x_k, i <= j
    std::set<Triple> muls;    // x_i * x_j = x_k, i <= j

    bool empty() const { return units.empty() && adds.empty() && muls.empty(); }
    size_t size() const { return units.size() + adds.size() + muls.size(); }
    bool operator==(const RelationSystem&) const = default;
};

// Every relation the tuple satisfies, exhaustively over index combinations
// (including degenerate i = j = k).
RelationSystem extract(const IntTuple& t);

// Display-order scan: additive triples over i <= j, then multiplicative
// triples over i <= j (restricted to j <= n-1 when skip_last_in_products is
// set), each with k running over the full range, i outermost ascending and k
// innermost ascending. Intended for tuples ending in 1 when the flag is set.
std::pair<std::vector<Triple>, std::vector<Triple>> extract_display(
    const IntTuple& t, bool skip_last_in_products);

// True iff y satisfies every relation of r (satisfaction is symmetric in
// i, j even though storage is canonical). Throws on arity mismatch.
bool satisfies(const IntTuple& y, const RelationSystem& r);

// True iff every relation of r1 appears in r2. Throws on arity mismatch.
bool subset(const RelationSystem& r1, const RelationSystem& r2);

// Text form: `U i` / `A i j k` / `M i j k` lines, units first, then adds,
// then muls, each group sorted; `#` comments allowed on input.
std::string format_relations(const RelationSystem& r);

// Parses with the given arity; indices outside 1..n are errors. Triples
// with i > j are normalized. Throws std::invalid_argument on bad input.
RelationSystem parse_relations(const std::string& text, int n);

}  // namespace bnk

#endif
