#include "bnk/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace bnk {

RelationSystem extract(const IntTuple& t) {
    RelationSystem r;
    r.n = t.n();
    for (int i = 1; i <= r.n; ++i)
        if (t.at1(i) == 1) r.units.insert(i);
    for (int i = 1; i <= r.n; ++i) {
        for (int j = i; j <= r.n; ++j) {
            Integer sum = t.at1(i) + t.at1(j);
            Integer prod = t.at1(i) * t.at1(j);
            for (int k = 1; k <= r.n; ++k) {
                if (t.at1(k) == sum) r.adds.insert({i, j, k});
                if (t.at1(k) == prod) r.muls.insert({i, j, k});
            }
        }
    }
    return r;
}

std::pair<std::vector<Triple>, std::vector<Triple>> extract_display(
    const IntTuple& t, bool skip_last_in_products) {
    const int n = t.n();
    std::vector<Triple> adds, muls;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.at1(i) + t.at1(j) == t.at1(k)) adds.push_back({i, j, k});
    const int factor_hi = skip_last_in_products ? n - 1 : n;
    for (int i = 1; i <= factor_hi; ++i)
        for (int j = i; j <= factor_hi; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.at1(i) * t.at1(j) == t.at1(k)) muls.push_back({i, j, k});
    return {std::move(adds), std::move(muls)};
}

bool satisfies(const IntTuple& y, const RelationSystem& r) {
    if (y.n() != r.n)
        throw std::invalid_argument("satisfies: arity mismatch (" +
                                    std::to_string(y.n()) + " vs " +
                                    std::to_string(r.n) + ")");
    for (int i : r.units)
        if (y.at1(i) != 1) return false;
    for (const Triple& t : r.adds)
        if (y.at1(t.i) + y.at1(t.j) != y.at1(t.k)) return false;
    for (const Triple& t : r.muls)
        if (y.at1(t.i) * y.at1(t.j) != y.at1(t.k)) return false;
    return true;
}

bool subset(const RelationSystem& r1, const RelationSystem& r2) {
    if (r1.n != r2.n)
        throw std::invalid_argument("subset: arity mismatch (" +
                                    std::to_string(r1.n) + " vs " +
                                    std::to_string(r2.n) + ")");
    for (int i : r1.units)
        if (!r2.units.count(i)) return false;
    for (const Triple& t : r1.adds)
        if (!r2.adds.count(t)) return false;
    for (const Triple& t : r1.muls)
        if (!r2.muls.count(t)) return false;
    return true;
}

std::string format_relations(const RelationSystem& r) {
    std::ostringstream out;
    for (int i : r.units) out << "U " << i << '\n';
    for (const Triple& t : r.adds) out << "A " << t.i << ' ' << t.j << ' ' << t.k << '\n';
    for (const Triple& t : r.muls) out << "M " << t.i << ' ' << t.j << ' ' << t.k << '\n';
    return out.str();
}

RelationSystem parse_relations(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("relations: arity must be >= 1");
    RelationSystem r;
    r.n = n;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("relations: line " + std::to_string(lineno) +
                                    ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto read_index = [&]() {
            long long v;
            if (!(ls >> v)) bad("expected index");
            if (v < 1 || v > n) bad("index " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
            return static_cast<int>(v);
        };
        if (kind == "U") {
            r.units.insert(read_index());
        } else if (kind == "A" || kind == "M") {
            int i = read_index(), j = read_index(), k = read_index();
            if (i > j) std::swap(i, j);
            (kind == "A" ? r.adds : r.muls).insert({i, j, k});
        } else {
            bad("unknown relation kind '" + kind + "'");
        }
        std::string rest;
        if (ls >> rest) bad("trailing token '" + rest + "'");
    }
    return r;
}

}  // namespace bnk
