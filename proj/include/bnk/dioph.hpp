#ifndef BNK_DIOPH_HPP
#define BNK_DIOPH_HPP

#include <set>
#include <string>
#include <vector>

#include "bnk/relations.hpp"
#include "bnk/tuple.hpp"

namespace bnk {

// Structured sum of squares in variables a, b, y_1..y_n attached to a base
// tuple: the leading term (a(t_1-y_1) - (2b-1)(3b-1))^2 is implicit; the
// unit/add/mul term sets equal extract(base)'s relations. Integer zeros of
// the polynomial correspond exactly to counterexamples against the base
// tuple's membership.
struct DPolynomial {
    IntTuple base;
    std::set<int> unit_terms;     // (y_i - 1)^2
    std::set<Triple> add_terms;   // (y_i + y_j - y_k)^2
    std::set<Triple> mul_terms;   // (y_i * y_j - y_k)^2

    int n() const { return base.n(); }
    size_t term_count() const {
        return 1 + unit_terms.size() + add_terms.size() + mul_terms.size();
    }
};

DPolynomial build_d(const IntTuple& t);

// Exact value at a total assignment over {A, B, 1..n}; always >= 0.
// Throws std::invalid_argument on a missing variable.
Integer evaluate_d(const DPolynomial& p, const Assignment& s);

// Converts a membership counterexample (satisfies(y, extract(t)), y_1 != t_1)
// into an integer zero of build_d(t): A, B from lemma_pair(t_1 - y_1), plus
// i -> y_i. Throws std::invalid_argument naming the violated relation or the
// y_1 = t_1 equality.
Assignment witness_to_solution(const IntTuple& t, const IntTuple& y);

enum class EmitFormat { Sexpr, Smt2 };

// Sexpr: one prefix expression over + - * ^, decimal literals, and variables
// a, b, y1..yn. Smt2: a complete SMT-LIB2 script over quantifier-free
// nonlinear integer arithmetic asserting the polynomial equals zero.
std::string emit_text(const DPolynomial& p, EmitFormat format);

// Expression tree for the emitted grammar:
//   expr := var | int | (+ e e+) | (- e e) | (* e e+) | (^ e 2)
// Square nodes have exactly one child. Sub nodes have two; a one-child Sub
// is accepted by the parser as negation (SMT-LIB compatibility) and never
// emitted.
struct Expr {
    enum class Op { Const, Var, Add, Sub, Mul, Square };
    Op op = Op::Const;
    Integer value;       // Const
    std::string var;     // Var: "a", "b", "y<k>"
    std::vector<Expr> kids;
};

// The polynomial as an expression tree (the exact shape emit_text prints).
Expr build_expr(const DPolynomial& p);

// Parses a single expression in the sexpr grammar. Throws
// std::invalid_argument with a diagnostic on malformed input.
Expr parse_sexpr(const std::string& text);

// Exact evaluation of a parsed expression; variables resolve through the
// assignment (a, b, y<k> -> index k). Throws on unbound variables.
Integer eval_expr(const Expr& e, const Assignment& s);

}  // namespace bnk

#endif
