#ifndef BNK_SOLVER_HPP
#define BNK_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "bnk/relations.hpp"
#include "bnk/tuple.hpp"

namespace bnk {

enum class PropagationStatus { Extended, Conflict, Stuck };

// A single relation instance, for conflict reporting. Unit relations carry
// only i.
struct RelationRef {
    enum class Kind { Unit, Add, Mul };
    Kind kind = Kind::Unit;
    int i = 0, j = 0, k = 0;
    bool operator==(const RelationRef&) const = default;
};

std::string format_relation_ref(const RelationRef& r);

struct PropagationResult {
    PropagationStatus status = PropagationStatus::Stuck;
    Assignment assignment;            // input values plus everything forced
    std::vector<int> free_indices;    // still undetermined, ascending
    std::optional<RelationRef> conflict;
};

// Runs forced-value propagation to fixpoint:
//   - unit i forces y_i = 1;
//   - an additive triple with one undetermined index is solved exactly
//     (2u = d with d odd is a conflict);
//   - a multiplicative triple forces the product from two known factors, or
//     a factor from the product and a known nonzero factor by exact division
//     (non-divisibility is a conflict); a known zero factor with nonzero
//     product is a conflict; with product zero the other factor stays free;
//   - every forced value must respect the domain floor and every fully
//     assigned relation is checked.
// Extended = at least one value was forced, Stuck = nothing to force.
// Throws std::invalid_argument if partial violates the domain.
PropagationResult propagate(const RelationSystem& r, const Assignment& partial,
                            Domain domain);

// Bounded counterexample/solution search outcome.
struct SearchReport {
    IntTuple tuple;
    Domain domain = Domain::Integers;
    long long bound = 0;
    std::vector<IntTuple> counterexamples;  // y_1 != tuple_1, sorted by <=_n
    unsigned long long confirmations = 0;   // solutions with y_1 = tuple_1
    bool exhausted = false;
};

// All total assignments satisfying r whose trial-assigned (not forced)
// values have absolute value <= bound, ordered by <=_n of the full tuple,
// truncated to limit. Search assigns undetermined variables one at a time
// in ascending index order, values in <=_1 order, propagating after each
// assignment.
std::vector<Assignment> enumerate_solutions(const RelationSystem& r, Domain domain,
                                            long long bound, size_t limit,
                                            int threads = 1);

// The <=_n-least solution y of extract(t) with y_1 != t_1 within the
// free-variable bound, if any. Deterministic for every thread count.
// Throws std::invalid_argument if t violates the domain.
std::optional<IntTuple> find_counterexample(const IntTuple& t, Domain domain,
                                            long long bound, int threads = 1);

// Exhausts the bounded search space and reports every counterexample plus
// the count of confirming solutions. Evidence up to the bound, never proof.
SearchReport certify_bounded(const IntTuple& t, Domain domain, long long bound,
                             int threads = 1);

// Text block: tuple, domain, bound, exhausted, confirmations, then one
// counterexample per line in tuple text format.
std::string format_report(const SearchReport& rep);

}  // namespace bnk

#endif
