#include "bnk/tuple.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bnk {

bool domain_contains(Domain d, const Integer& v) {
    switch (d) {
        case Domain::Integers: return true;
        case Domain::Naturals: return v >= 0;
        case Domain::Positive: return v >= 1;
    }
    return false;
}

bool domain_contains(Domain d, const IntTuple& t) {
    for (const Integer& v : t.entries)
        if (!domain_contains(d, v)) return false;
    return true;
}

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::Integers: return "Z";
        case Domain::Naturals: return "N";
        case Domain::Positive: return "N1";
    }
    return "?";
}

std::optional<Domain> domain_from_name(const std::string& s) {
    if (s == "Z") return Domain::Integers;
    if (s == "N") return Domain::Naturals;
    if (s == "N1") return Domain::Positive;
    return std::nullopt;
}

Integer shell_of(const IntTuple& t) {
    Integer m = 0;
    for (const Integer& v : t.entries) {
        Integer a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

std::strong_ordering shell_compare(const IntTuple& t, const IntTuple& u) {
    if (t.n() != u.n())
        throw std::invalid_argument("shell_compare: arity mismatch (" +
                                    std::to_string(t.n()) + " vs " +
                                    std::to_string(u.n()) + ")");
    Integer st = shell_of(t), su = shell_of(u);
    if (int c = cmp(st, su); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (int i = 0; i < t.n(); ++i) {
        if (int c = cmp(t.entries[i], u.entries[i]); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

void Assignment::set(int index, Integer v) {
    if (index < 1) throw std::invalid_argument("Assignment: index must be >= 1");
    values_[index] = std::move(v);
}

const Integer& Assignment::get(int index) const {
    auto it = values_.find(index);
    if (it == values_.end())
        throw std::invalid_argument("Assignment: variable " + std::to_string(index) +
                                    " is unset");
    return it->second;
}

bool Assignment::total(int n) const {
    for (int i = 1; i <= n; ++i)
        if (!has(i)) return false;
    return true;
}

IntTuple Assignment::to_tuple(int n) const {
    IntTuple t;
    t.entries.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) t.entries.push_back(get(i));
    return t;
}

namespace {

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : c);
    }
    return out;
}

bool valid_decimal(const std::string& tok) {
    size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

}  // namespace

IntTuple parse_tuple(const std::string& text) {
    std::istringstream in(strip_comments(text));
    IntTuple t;
    std::string tok;
    while (in >> tok) {
        if (!valid_decimal(tok))
            throw std::invalid_argument("tuple: invalid integer token '" + tok + "'");
        t.entries.emplace_back(tok);
    }
    if (t.entries.empty()) throw std::invalid_argument("tuple: no entries");
    return t;
}

IntTuple parse_tuple_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("tuple: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tuple(buf.str());
}

std::string format_tuple(const IntTuple& t) {
    std::string out;
    for (int i = 0; i < t.n(); ++i) {
        if (i) out += ' ';
        out += t.entries[static_cast<size_t>(i)].get_str();
    }
    return out;
}

}  // namespace bnk
