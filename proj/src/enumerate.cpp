#include "bnk/enumerate.hpp"

#include <stdexcept>

namespace bnk {

TupleStream::TupleStream(int n, Domain domain) : n_(n), domain_(domain) {
    if (n < 1) throw std::invalid_argument("TupleStream: arity must be >= 1");
    cur_.assign(static_cast<size_t>(n), 0);
    // Shell 0 of N\{0} is empty; enumeration starts at shell 1.
    shell_ = (domain == Domain::Positive) ? 1 : 0;
    first_of_shell();
}

long long TupleStream::range_lo() const {
    switch (domain_) {
        case Domain::Integers: return -shell_;
        case Domain::Naturals: return 0;
        case Domain::Positive: return 1;
    }
    return 0;
}

bool TupleStream::at_boundary(long long v) const {
    return (domain_ == Domain::Integers) ? (v == shell_ || v == -shell_)
                                         : (v == shell_);
}

void TupleStream::first_of_shell() {
    long long lo = range_lo();
    bool have_boundary = false;
    for (int i = 0; i + 1 < n_; ++i) {
        cur_[static_cast<size_t>(i)] = lo;
        have_boundary = have_boundary || at_boundary(lo);
    }
    // The last coordinate must supply the boundary when the prefix does not.
    long long last = lo;
    if (!have_boundary && !at_boundary(lo))
        last = (domain_ == Domain::Integers) ? -shell_ : shell_;
    cur_[static_cast<size_t>(n_ - 1)] = last;
}

bool TupleStream::advance_in_shell() {
    long long hi = shell_;
    for (int i = n_ - 1; i >= 0; --i) {
        size_t ui = static_cast<size_t>(i);
        bool prefix_boundary = false;
        for (int j = 0; j < i; ++j)
            prefix_boundary = prefix_boundary || at_boundary(cur_[static_cast<size_t>(j)]);

        bool restricted = (i == n_ - 1) && !prefix_boundary;
        long long next;
        bool can = false;
        if (!restricted) {
            if (cur_[ui] < hi) {
                next = cur_[ui] + 1;
                can = true;
            }
        } else {
            // Boundary-only position: {-r, r} over Z, {r} otherwise.
            if (domain_ == Domain::Integers && cur_[ui] == -shell_ && shell_ > 0) {
                next = shell_;
                can = true;
            }
        }
        if (!can) continue;

        cur_[ui] = next;
        bool have_boundary = false;
        for (int j = 0; j <= i; ++j)
            have_boundary = have_boundary || at_boundary(cur_[static_cast<size_t>(j)]);
        long long lo = range_lo();
        for (int j = i + 1; j < n_; ++j) {
            size_t uj = static_cast<size_t>(j);
            if (j == n_ - 1 && !have_boundary && !at_boundary(lo))
                cur_[uj] = (domain_ == Domain::Integers) ? -shell_ : shell_;
            else
                cur_[uj] = lo;
            have_boundary = have_boundary || at_boundary(cur_[uj]);
        }
        return true;
    }
    return false;
}

IntTuple TupleStream::next() {
    IntTuple out;
    out.entries.reserve(static_cast<size_t>(n_));
    for (long long v : cur_) out.entries.push_back(to_integer(v));
    if (!advance_in_shell()) {
        ++shell_;
        first_of_shell();
    }
    return out;
}

std::vector<IntTuple> first_tuples(int n, Domain domain, size_t k) {
    TupleStream s(n, domain);
    std::vector<IntTuple> out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) out.push_back(s.next());
    return out;
}

std::vector<IntTuple> tuples_up_to_shell(int n, Domain domain, long long bound) {
    TupleStream s(n, domain);
    std::vector<IntTuple> out;
    while (s.shell() <= bound) out.push_back(s.next());
    return out;
}

std::vector<long long> value_order(Domain domain, long long bound) {
    std::vector<long long> out;
    if (bound < 0) return out;
    switch (domain) {
        case Domain::Integers:
            out.push_back(0);
            for (long long v = 1; v <= bound; ++v) {
                out.push_back(-v);
                out.push_back(v);
            }
            break;
        case Domain::Naturals:
            for (long long v = 0; v <= bound; ++v) out.push_back(v);
            break;
        case Domain::Positive:
            for (long long v = 1; v <= bound; ++v) out.push_back(v);
            break;
    }
    return out;
}

}  // namespace bnk
