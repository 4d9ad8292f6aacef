#ifndef BNK_ENUMERATE_HPP
#define BNK_ENUMERATE_HPP

#include <vector>

#include "bnk/tuple.hpp"

namespace bnk {

// Unbounded stream over domain^n in strictly increasing <=_n order: shell by
// shell, lexicographic inside each shell. Shell r holds the tuples whose
// max absolute value (max value over N / N\{0}) is exactly r. Single
// consumer; copy the stream to fork it.
class TupleStream {
  public:
    // n >= 1 or std::invalid_argument.
    TupleStream(int n, Domain domain);

    // Next tuple in order. The stream never ends.
    IntTuple next();

    // Shell of the tuple next() will return.
    long long shell() const { return shell_; }

  private:
    void first_of_shell();
    bool advance_in_shell();
    long long range_lo() const;
    bool at_boundary(long long v) const;

    int n_;
    Domain domain_;
    long long shell_;
    std::vector<long long> cur_;
};

// First k tuples of the stream.
std::vector<IntTuple> first_tuples(int n, Domain domain, size_t k);

// All tuples with shell <= bound, in order.
std::vector<IntTuple> tuples_up_to_shell(int n, Domain domain, long long bound);

// 1-D trial values up to the given shell bound, in <=_1 order:
// Z: 0, -1, 1, -2, 2, ...   N: 0, 1, 2, ...   N\{0}: 1, 2, ...
std::vector<long long> value_order(Domain domain, long long bound);

}  // namespace bnk

#endif
