#include "bnk/equations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "bnk/crt.hpp"

namespace bnk {

long long equation_floor(NamedEquation eq) {
    return eq == NamedEquation::SquaresM1 ? 2 : 1;
}

std::string equation_name(NamedEquation eq) {
    switch (eq) {
        case NamedEquation::SierpinskiQ1: return "q1";
        case NamedEquation::ShiftedQ2: return "q2";
        case NamedEquation::SquaresM1: return "sq1";
    }
    return "?";
}

namespace {

Integer q1_side(long long v) {
    Integer t = to_integer(v) * to_integer(v + 1);
    return t * t;
}

Integer q2_left(long long v) {
    Integer t = to_integer(v + 14) * to_integer(v + 16);
    return t * t;
}

Integer q2_side(long long v) {
    Integer t = to_integer(v) * to_integer(v + 2);
    return t * t;
}

Integer m1_side(long long v) {
    Integer t = to_integer(v) * to_integer(v) - 1;
    return t * t;
}

Integer x_value(NamedEquation eq, long long x) {
    switch (eq) {
        case NamedEquation::SierpinskiQ1: return q1_side(x);
        case NamedEquation::ShiftedQ2: return q2_left(x);
        case NamedEquation::SquaresM1: return m1_side(x);
    }
    return 0;
}

Integer y_value(NamedEquation eq, long long y) {
    switch (eq) {
        case NamedEquation::SierpinskiQ1: return q1_side(y);
        case NamedEquation::ShiftedQ2: return q2_side(y);
        case NamedEquation::SquaresM1: return m1_side(y);
    }
    return 0;
}

Integer z_value(NamedEquation eq, long long z) {
    switch (eq) {
        case NamedEquation::SierpinskiQ1: return q1_side(z);
        case NamedEquation::ShiftedQ2: return q2_side(z);
        case NamedEquation::SquaresM1: return m1_side(z);
    }
    return 0;
}

}  // namespace

std::vector<EqTriple> search_equation(NamedEquation eq, long long bound, int threads) {
    const long long lo = equation_floor(eq);
    if (bound < lo)
        throw std::invalid_argument("search_equation: bound must be >= " +
                                    std::to_string(lo));
    if (threads < 1) threads = 1;

    // z-side values are strictly increasing over the search range, so each
    // value keys a unique z.
    std::map<Integer, long long> z_table;
    for (long long z = lo; z <= bound; ++z) z_table.emplace(z_value(eq, z), z);

    auto scan = [&](long long x_from, long long x_step, std::vector<EqTriple>& out) {
        for (long long x = x_from; x <= bound; x += x_step) {
            Integer lhs_x = x_value(eq, x);
            for (long long y = lo; y <= bound; ++y) {
                auto it = z_table.find(lhs_x + y_value(eq, y));
                if (it != z_table.end()) out.push_back({x, y, it->second});
            }
        }
    };

    std::vector<EqTriple> found;
    if (threads == 1) {
        scan(lo, 1, found);
    } else {
        std::vector<std::vector<EqTriple>> parts(static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(scan, lo + t, static_cast<long long>(threads),
                              std::ref(parts[static_cast<size_t>(t)]));
        for (auto& th : pool) th.join();
        for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
    }
    std::sort(found.begin(), found.end());
    return found;
}

namespace {

// b paired with 132*133*143*144 by the constructive lemma.
const long kB = 200526827;

IntTuple theorem1_tuple() {
    Integer b = kB;
    Integer p164 = Integer(164) * 165;    // 27060
    Integer p132 = Integer(132) * 133;    // 17556
    Integer p143 = Integer(143) * 144;    // 20592
    Integer prod = p132 * p143;           // 361513152
    Integer lhs = (2 * b - 1) * (3 * b - 1);
    return IntTuple{p164,         p164 * p164, 164,         165,
                    132,          133,         p132,        p132 * p132,
                    143,          144,         p143,        p143 * p143,
                    prod,         b,           2 * b,       2 * b - 1,
                    3 * b - 1,    lhs,         exact_div(lhs, prod), 1};
}

IntTuple theorem2_tuple() {
    Integer p328 = Integer(328) * 330;
    Integer p264 = Integer(264) * 266;
    Integer p286 = Integer(286) * 288;
    return IntTuple{328, 330, p328, p328 * p328, 264, 266, p264, p264 * p264,
                    286, 288, p286, p286 * p286, 250, 16,  4,    2,
                    1};
}

IntTuple b13_tuple() {
    Integer p164 = Integer(164) * 165;
    Integer p132 = Integer(132) * 133;
    Integer p143 = Integer(143) * 144;
    return IntTuple{164, 165, p164, p164 * p164, 132, 133, p132, p132 * p132,
                    143, 144, p143, p143 * p143, 1};
}

IntTuple b15_tuple() {
    Integer p164 = Integer(164) * 165;
    Integer p132 = Integer(132) * 133;
    Integer p143 = Integer(143) * 144;
    return IntTuple{164, 165, p164, p164 * p164, 131, 132, 133, p132,
                    p132 * p132, 142, 143, 144, p143, p143 * p143, 1};
}

}  // namespace

IntTuple paper_tuple(BuiltinTuple which) {
    switch (which) {
        case BuiltinTuple::Theorem1_20: return theorem1_tuple();
        case BuiltinTuple::Theorem2_17: return theorem2_tuple();
        case BuiltinTuple::B13Pos: return b13_tuple();
        case BuiltinTuple::B15Nat: return b15_tuple();
    }
    throw std::logic_error("paper_tuple: bad selector");
}

Assignment complete_witness_theorem1(const Integer& x, const Integer& y,
                                     const Integer& z) {
    Integer px = x * (x + 1);
    Integer py = y * (y + 1);
    Integer pz = z * (z + 1);
    if (px * px + py * py != pz * pz)
        throw std::invalid_argument(
            "complete_witness_theorem1: x^2(x+1)^2 + y^2(y+1)^2 != z^2(z+1)^2");
    if (px == 0 || py == 0)
        throw std::invalid_argument(
            "complete_witness_theorem1: x(x+1)y(y+1) must be nonzero");

    Integer prod = px * py;
    CrtCertificate c = lemma_pair(prod);

    Assignment s;
    s.set(1, pz);
    s.set(2, pz * pz);
    s.set(3, z);
    s.set(4, z + 1);
    s.set(5, x);
    s.set(6, x + 1);
    s.set(7, px);
    s.set(8, px * px);
    s.set(9, y);
    s.set(10, y + 1);
    s.set(11, py);
    s.set(12, py * py);
    s.set(13, prod);
    s.set(14, c.b);
    s.set(15, 2 * c.b);
    s.set(16, 2 * c.b - 1);
    s.set(17, 3 * c.b - 1);
    s.set(18, (2 * c.b - 1) * (3 * c.b - 1));
    s.set(19, c.a);
    s.set(20, 1);
    return s;
}

}  // namespace bnk
