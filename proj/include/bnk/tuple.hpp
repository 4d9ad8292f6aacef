#ifndef BNK_TUPLE_HPP
#define BNK_TUPLE_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnk/integer.hpp"

namespace bnk {

// Length-n sequence of exact integers. Indices are 1-based in every public
// interface; at1(i) reads entry i.
struct IntTuple {
    std::vector<Integer> entries;

    IntTuple() = default;
    explicit IntTuple(std::vector<Integer> e) : entries(std::move(e)) {}
    IntTuple(std::initializer_list<Integer> e) : entries(e) {}

    int n() const { return static_cast<int>(entries.size()); }
    const Integer& at1(int i) const { return entries[static_cast<size_t>(i) - 1]; }
    Integer& at1(int i) { return entries[static_cast<size_t>(i) - 1]; }

    bool operator==(const IntTuple& o) const = default;
};

enum class Domain {
    Integers,  // Z
    Naturals,  // N, entries >= 0
    Positive,  // N \ {0}, entries >= 1
};

bool domain_contains(Domain d, const Integer& v);
bool domain_contains(Domain d, const IntTuple& t);

// Token used by the CLI and text reports: Z, N, N1.
std::string domain_name(Domain d);
std::optional<Domain> domain_from_name(const std::string& s);

// Shell of a tuple: max |entry| (equals max entry for N / N\{0}).
Integer shell_of(const IntTuple& t);

// The <=_n order: by shell, ties broken lexicographically entry by entry
// under the usual signed order. Throws std::invalid_argument on arity
// mismatch.
std::strong_ordering shell_compare(const IntTuple& t, const IntTuple& u);

inline bool shell_less(const IntTuple& t, const IntTuple& u) {
    return shell_compare(t, u) == std::strong_ordering::less;
}

// Partial mapping from 1-based variable indices to integers, with the two
// distinguished variables A and B used by the D-polynomial.
class Assignment {
  public:
    Assignment() = default;

    void set(int index, Integer v);
    bool has(int index) const { return values_.count(index) != 0; }
    const Integer& get(int index) const;  // throws if unset

    void set_a(Integer v) { a_ = std::move(v); }
    void set_b(Integer v) { b_ = std::move(v); }
    const std::optional<Integer>& a() const { return a_; }
    const std::optional<Integer>& b() const { return b_; }

    const std::map<int, Integer>& values() const { return values_; }

    // Covers every index 1..n.
    bool total(int n) const;

    // Requires total(n); materializes (y_1,...,y_n).
    IntTuple to_tuple(int n) const;

    bool operator==(const Assignment& o) const = default;

  private:
    std::map<int, Integer> values_;
    std::optional<Integer> a_, b_;
};

// Tuple text format: decimal integers separated by whitespace, `#` starts a
// comment running to end of line. Arity is the number of integers read.
// Throws std::invalid_argument on malformed or empty input.
IntTuple parse_tuple(const std::string& text);
IntTuple parse_tuple_file(const std::string& path);

// One line, entries separated by single spaces, no trailing newline.
std::string format_tuple(const IntTuple& t);

}  // namespace bnk

#endif
