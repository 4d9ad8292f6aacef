#include "bnk/dioph.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bnk/crt.hpp"

namespace bnk {

DPolynomial build_d(const IntTuple& t) {
    RelationSystem r = extract(t);
    DPolynomial p;
    p.base = t;
    p.unit_terms = std::move(r.units);
    p.add_terms = std::move(r.adds);
    p.mul_terms = std::move(r.muls);
    return p;
}

namespace {

const Integer& var_y(const Assignment& s, int i) { return s.get(i); }

}  // namespace

Integer evaluate_d(const DPolynomial& p, const Assignment& s) {
    if (!s.a() || !s.b())
        throw std::invalid_argument("evaluate_d: assignment must bind a and b");
    for (int i = 1; i <= p.n(); ++i)
        if (!s.has(i))
            throw std::invalid_argument("evaluate_d: assignment must bind y" +
                                        std::to_string(i));
    const Integer& a = *s.a();
    const Integer& b = *s.b();
    Integer lead = a * (p.base.at1(1) - var_y(s, 1)) - (2 * b - 1) * (3 * b - 1);
    Integer total = lead * lead;
    for (int i : p.unit_terms) {
        Integer d = var_y(s, i) - 1;
        total += d * d;
    }
    for (const Triple& t : p.add_terms) {
        Integer d = var_y(s, t.i) + var_y(s, t.j) - var_y(s, t.k);
        total += d * d;
    }
    for (const Triple& t : p.mul_terms) {
        Integer d = var_y(s, t.i) * var_y(s, t.j) - var_y(s, t.k);
        total += d * d;
    }
    return total;
}

Assignment witness_to_solution(const IntTuple& t, const IntTuple& y) {
    if (t.n() != y.n())
        throw std::invalid_argument("witness_to_solution: arity mismatch");
    if (y.at1(1) == t.at1(1))
        throw std::invalid_argument(
            "witness_to_solution: y_1 equals t_1, not a counterexample");
    RelationSystem r = extract(t);
    for (int i : r.units)
        if (y.at1(i) != 1)
            throw std::invalid_argument("witness_to_solution: witness violates U " +
                                        std::to_string(i));
    for (const Triple& tr : r.adds)
        if (y.at1(tr.i) + y.at1(tr.j) != y.at1(tr.k))
            throw std::invalid_argument("witness_to_solution: witness violates " +
                                        std::string("A ") + std::to_string(tr.i) + " " +
                                        std::to_string(tr.j) + " " + std::to_string(tr.k));
    for (const Triple& tr : r.muls)
        if (y.at1(tr.i) * y.at1(tr.j) != y.at1(tr.k))
            throw std::invalid_argument("witness_to_solution: witness violates " +
                                        std::string("M ") + std::to_string(tr.i) + " " +
                                        std::to_string(tr.j) + " " + std::to_string(tr.k));
    CrtCertificate c = lemma_pair(t.at1(1) - y.at1(1));
    Assignment s;
    s.set_a(c.a);
    s.set_b(c.b);
    for (int i = 1; i <= y.n(); ++i) s.set(i, y.at1(i));
    return s;
}

namespace {

Expr make_const(Integer v) {
    Expr e;
    e.op = Expr::Op::Const;
    e.value = std::move(v);
    return e;
}

Expr make_var(std::string name) {
    Expr e;
    e.op = Expr::Op::Var;
    e.var = std::move(name);
    return e;
}

Expr make_node(Expr::Op op, std::vector<Expr> kids) {
    Expr e;
    e.op = op;
    e.kids = std::move(kids);
    return e;
}

Expr y_var(int i) { return make_var("y" + std::to_string(i)); }

Expr square(Expr e) { return make_node(Expr::Op::Square, {std::move(e)}); }

}  // namespace

Expr build_expr(const DPolynomial& p) {
    std::vector<Expr> terms;
    // (a(t1 - y1) - (2b-1)(3b-1))^2
    Expr two_b_minus_1 = make_node(
        Expr::Op::Sub,
        {make_node(Expr::Op::Mul, {make_const(2), make_var("b")}), make_const(1)});
    Expr three_b_minus_1 = make_node(
        Expr::Op::Sub,
        {make_node(Expr::Op::Mul, {make_const(3), make_var("b")}), make_const(1)});
    Expr lead = make_node(
        Expr::Op::Sub,
        {make_node(Expr::Op::Mul,
                   {make_var("a"),
                    make_node(Expr::Op::Sub, {make_const(p.base.at1(1)), y_var(1)})}),
         make_node(Expr::Op::Mul, {std::move(two_b_minus_1), std::move(three_b_minus_1)})});
    terms.push_back(square(std::move(lead)));

    for (int i : p.unit_terms)
        terms.push_back(square(make_node(Expr::Op::Sub, {y_var(i), make_const(1)})));
    for (const Triple& t : p.add_terms)
        terms.push_back(square(make_node(
            Expr::Op::Sub,
            {make_node(Expr::Op::Add, {y_var(t.i), y_var(t.j)}), y_var(t.k)})));
    for (const Triple& t : p.mul_terms)
        terms.push_back(square(make_node(
            Expr::Op::Sub,
            {make_node(Expr::Op::Mul, {y_var(t.i), y_var(t.j)}), y_var(t.k)})));

    if (terms.size() == 1) return std::move(terms.front());
    return make_node(Expr::Op::Add, std::move(terms));
}

namespace {

void print_sexpr(const Expr& e, std::ostringstream& out) {
    switch (e.op) {
        case Expr::Op::Const: out << e.value; return;
        case Expr::Op::Var: out << e.var; return;
        case Expr::Op::Square:
            out << "(^ ";
            print_sexpr(e.kids[0], out);
            out << " 2)";
            return;
        case Expr::Op::Add:
        case Expr::Op::Sub:
        case Expr::Op::Mul: {
            out << '(' << (e.op == Expr::Op::Add ? '+' : e.op == Expr::Op::Sub ? '-' : '*');
            for (const Expr& k : e.kids) {
                out << ' ';
                print_sexpr(k, out);
            }
            out << ')';
            return;
        }
    }
}

// SMT-LIB has no power operator in integer arithmetic and no negative
// numerals; squares print as self-products and negative constants as (- n).
void print_smt2(const Expr& e, std::ostringstream& out) {
    switch (e.op) {
        case Expr::Op::Const:
            if (e.value < 0)
                out << "(- " << -e.value << ')';
            else
                out << e.value;
            return;
        case Expr::Op::Var: out << e.var; return;
        case Expr::Op::Square:
            out << "(* ";
            print_smt2(e.kids[0], out);
            out << ' ';
            print_smt2(e.kids[0], out);
            out << ')';
            return;
        case Expr::Op::Add:
        case Expr::Op::Sub:
        case Expr::Op::Mul: {
            out << '(' << (e.op == Expr::Op::Add ? '+' : e.op == Expr::Op::Sub ? '-' : '*');
            for (const Expr& k : e.kids) {
                out << ' ';
                print_smt2(k, out);
            }
            out << ')';
            return;
        }
    }
}

}  // namespace

std::string emit_text(const DPolynomial& p, EmitFormat format) {
    Expr e = build_expr(p);
    std::ostringstream out;
    if (format == EmitFormat::Sexpr) {
        print_sexpr(e, out);
        out << '\n';
        return out.str();
    }
    out << "(set-logic QF_NIA)\n";
    out << "(declare-const a Int)\n";
    out << "(declare-const b Int)\n";
    for (int i = 1; i <= p.n(); ++i) out << "(declare-const y" << i << " Int)\n";
    out << "(assert (= ";
    print_smt2(e, out);
    out << " 0))\n";
    out << "(check-sat)\n";
    return out.str();
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("sexpr: " + why + " at offset " +
                                    std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    std::string token() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        size_t start = pos;
        while (pos < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == start) fail("empty token");
        return text.substr(start, pos - start);
    }

    Expr expr() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '(') return list();
        if (text[pos] == ')') fail("unexpected ')'");
        std::string tok = token();
        if (std::isdigit(static_cast<unsigned char>(tok[0])) ||
            (tok[0] == '-' && tok.size() > 1))
            return make_const(Integer(tok));
        return make_var(tok);
    }

    Expr list() {
        ++pos;  // '('
        skip_ws();
        if (pos >= text.size()) fail("unterminated list");
        std::string op = token();
        std::vector<Expr> kids;
        while (true) {
            skip_ws();
            if (pos >= text.size()) fail("unterminated list");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            kids.push_back(expr());
        }
        if (op == "+") {
            if (kids.size() < 2) fail("+ needs at least two operands");
            return make_node(Expr::Op::Add, std::move(kids));
        }
        if (op == "*") {
            if (kids.size() < 2) fail("* needs at least two operands");
            return make_node(Expr::Op::Mul, std::move(kids));
        }
        if (op == "-") {
            // Unary minus accepted for SMT-LIB inputs.
            if (kids.size() != 2 && kids.size() != 1) fail("- needs one or two operands");
            return make_node(Expr::Op::Sub, std::move(kids));
        }
        if (op == "^") {
            if (kids.size() != 2 || kids[1].op != Expr::Op::Const || kids[1].value != 2)
                fail("^ supports exponent 2 only");
            kids.pop_back();
            return make_node(Expr::Op::Square, std::move(kids));
        }
        fail("unknown operator '" + op + "'");
    }
};

}  // namespace

Expr parse_sexpr(const std::string& text) {
    Parser p{text};
    Expr e = p.expr();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

Integer eval_expr(const Expr& e, const Assignment& s) {
    switch (e.op) {
        case Expr::Op::Const: return e.value;
        case Expr::Op::Var: {
            if (e.var == "a") {
                if (!s.a()) throw std::invalid_argument("eval: unbound variable a");
                return *s.a();
            }
            if (e.var == "b") {
                if (!s.b()) throw std::invalid_argument("eval: unbound variable b");
                return *s.b();
            }
            if (e.var.size() > 1 && e.var[0] == 'y')
                return s.get(std::stoi(e.var.substr(1)));
            throw std::invalid_argument("eval: unknown variable '" + e.var + "'");
        }
        case Expr::Op::Add: {
            Integer total = 0;
            for (const Expr& k : e.kids) total += eval_expr(k, s);
            return total;
        }
        case Expr::Op::Sub: {
            if (e.kids.size() == 1) return -eval_expr(e.kids[0], s);
            return eval_expr(e.kids[0], s) - eval_expr(e.kids[1], s);
        }
        case Expr::Op::Mul: {
            Integer total = 1;
            for (const Expr& k : e.kids) total *= eval_expr(k, s);
            return total;
        }
        case Expr::Op::Square: {
            Integer v = eval_expr(e.kids[0], s);
            return v * v;
        }
    }
    throw std::logic_error("eval: bad node");
}

}  // namespace bnk
