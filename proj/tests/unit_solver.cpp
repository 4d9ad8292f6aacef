#include <doctest.h>

#include <optional>

#include "bnk/enumerate.hpp"
#include "bnk/equations.hpp"
#include "bnk/solver.hpp"
#include "test_support.hpp"

using namespace bnk;

namespace {

// Propagation-free reference: first tuple in <=_n order over the full box
// satisfying extract(t) with y_1 != t_1.
std::optional<IntTuple> oracle_counterexample(const IntTuple& t, Domain d,
                                              long long bound) {
    RelationSystem r = extract(t);
    for (const IntTuple& y : test::ref_ordered(t.n(), d, bound))
        if (y.at1(1) != t.at1(1) && satisfies(y, r)) return y;
    return std::nullopt;
}

}  // namespace

TEST_CASE("propagate forces unit chains") {
    PropagationResult res = propagate(extract(IntTuple{2, 1}), Assignment(),
                                      Domain::Integers);
    CHECK(res.status == PropagationStatus::Extended);
    CHECK(res.assignment.get(2) == 1);
    CHECK(res.assignment.get(1) == 2);
    CHECK(res.free_indices.empty());
}

TEST_CASE("propagate solves t + t = t") {
    PropagationResult res = propagate(extract(IntTuple{0}), Assignment(),
                                      Domain::Integers);
    CHECK(res.status == PropagationStatus::Extended);
    CHECK(res.assignment.get(1) == 0);
}

TEST_CASE("propagate is stuck on an empty system") {
    PropagationResult res = propagate(extract(IntTuple{2}), Assignment(),
                                      Domain::Integers);
    CHECK(res.status == PropagationStatus::Stuck);
    CHECK(res.free_indices == std::vector<int>{1});
    CHECK(res.assignment.values().empty());
}

TEST_CASE("propagate reports conflicts with the violated relation") {
    // y_2 = 1 forces y_1 = 2 by the additive triple; seeding y_1 = 3 clashes.
    Assignment partial;
    partial.set(1, 3);
    PropagationResult res = propagate(extract(IntTuple{2, 1}), partial,
                                      Domain::Integers);
    CHECK(res.status == PropagationStatus::Conflict);
    REQUIRE(res.conflict.has_value());

    // Odd sum cannot split evenly: y_1 + y_1 = y_2 with y_2 = 5.
    RelationSystem r;
    r.n = 2;
    r.adds.insert({1, 1, 2});
    Assignment odd;
    odd.set(2, 5);
    res = propagate(r, odd, Domain::Integers);
    CHECK(res.status == PropagationStatus::Conflict);

    // Domain floor: y_1 + y_1 = y_2 with y_2 = -2 forces y_1 = -1 < 0 over N.
    Assignment neg;
    neg.set(2, 0);
    res = propagate(r, neg, Domain::Naturals);
    CHECK(res.status != PropagationStatus::Conflict);
    CHECK(res.assignment.get(1) == 0);

    CHECK_THROWS_AS(propagate(r, [] {
                        Assignment a;
                        a.set(1, -1);
                        return a;
                    }(), Domain::Naturals),
                    std::invalid_argument);
}

TEST_CASE("propagate multiplicative rules") {
    // y_1 * y_2 = y_3 with product and one nonzero factor known.
    RelationSystem r;
    r.n = 3;
    r.muls.insert({1, 2, 3});
    Assignment s;
    s.set(1, 3);
    s.set(3, 12);
    PropagationResult res = propagate(r, s, Domain::Integers);
    CHECK(res.assignment.get(2) == 4);

    // Non-exact division conflicts.
    Assignment bad;
    bad.set(1, 3);
    bad.set(3, 13);
    res = propagate(r, bad, Domain::Integers);
    CHECK(res.status == PropagationStatus::Conflict);
    CHECK(res.conflict == RelationRef{RelationRef::Kind::Mul, 1, 2, 3});

    // Zero factor, nonzero product conflicts.
    Assignment zf;
    zf.set(1, 0);
    zf.set(3, 5);
    res = propagate(r, zf, Domain::Integers);
    CHECK(res.status == PropagationStatus::Conflict);

    // Zero factor, zero product leaves the other factor free.
    Assignment zz;
    zz.set(1, 0);
    zz.set(3, 0);
    res = propagate(r, zz, Domain::Integers);
    CHECK(res.status == PropagationStatus::Stuck);
    CHECK(res.free_indices == std::vector<int>{2});
}

TEST_CASE("propagation never conflicts along the defining tuple") {
    auto g = test::rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + static_cast<int>(g() % 4);
        IntTuple t = test::random_tuple(g, n, -4, 4);
        RelationSystem r = extract(t);
        Assignment partial;
        for (int i = 1; i <= n; ++i)
            if (g() % 2) partial.set(i, t.at1(i));
        PropagationResult res = propagate(r, partial, Domain::Integers);
        REQUIRE(res.status != PropagationStatus::Conflict);
        // Anything forced must agree with t, which extends partial.
        for (const auto& [idx, v] : res.assignment.values()) CHECK(v == t.at1(idx));
    }
}

TEST_CASE("enumerate_solutions") {
    auto sols = enumerate_solutions(extract(IntTuple{2, 1}), Domain::Integers, 5, 100);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].to_tuple(2) == IntTuple{2, 1});

    RelationSystem unit1;
    unit1.n = 1;
    unit1.units.insert(1);
    sols = enumerate_solutions(unit1, Domain::Integers, 0, 100);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].to_tuple(1) == IntTuple{1});

    // Empty system accepts everything; must match core enumeration order.
    sols = enumerate_solutions(extract(IntTuple{3, 2}), Domain::Integers, 1, 9);
    REQUIRE(sols.size() == 9);
    auto want = first_tuples(2, Domain::Integers, 9);
    for (size_t i = 0; i < sols.size(); ++i) CHECK(sols[i].to_tuple(2) == want[i]);

    // Truncation by limit keeps the least solutions.
    sols = enumerate_solutions(extract(IntTuple{3, 2}), Domain::Integers, 1, 4);
    REQUIRE(sols.size() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(sols[i].to_tuple(2) == want[i]);
}

TEST_CASE("enumerated solutions satisfy the system") {
    auto g = test::rng(29);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 1 + static_cast<int>(g() % 3);
        IntTuple t = test::random_tuple(g, n, -3, 3);
        RelationSystem r = extract(t);
        for (const Assignment& s : enumerate_solutions(r, Domain::Integers, 3, 50))
            CHECK(satisfies(s.to_tuple(n), r));
    }
}

TEST_CASE("find_counterexample basics") {
    auto w = find_counterexample(IntTuple{2}, Domain::Integers, 0);
    REQUIRE(w.has_value());
    CHECK(*w == IntTuple{0});

    CHECK(!find_counterexample(IntTuple{1}, Domain::Integers, 7).has_value());
    CHECK(!find_counterexample(IntTuple{2, 1}, Domain::Integers, 10).has_value());

    CHECK_THROWS_AS(find_counterexample(IntTuple{-2}, Domain::Naturals, 3),
                    std::invalid_argument);
}

TEST_CASE("find_counterexample matches the raw oracle on a sample") {
    auto g = test::rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(g() % 2);
        IntTuple t = test::random_tuple(g, n, -3, 3);
        CAPTURE(format_tuple(t));
        auto got = find_counterexample(t, Domain::Integers, 4);
        auto want = oracle_counterexample(t, Domain::Integers, 4);
        CHECK(got == want);
    }
}

TEST_CASE("oracle agreement holds over N and N \\ {0} as well") {
    for (Domain d : {Domain::Naturals, Domain::Positive}) {
        long lo = d == Domain::Naturals ? 0 : 1;
        for (long a = lo; a <= 3; ++a)
            for (long b = lo; b <= 3; ++b) {
                IntTuple t{a, b};
                CAPTURE(domain_name(d));
                CAPTURE(format_tuple(t));
                auto got = find_counterexample(t, d, 5);
                RelationSystem r = extract(t);
                std::optional<IntTuple> want;
                for (const IntTuple& y : test::ref_ordered(2, d, 5))
                    if (y.at1(1) != t.at1(1) && satisfies(y, r)) {
                        want = y;
                        break;
                    }
                CHECK(got == want);
            }
    }
}

TEST_CASE("search results are identical across thread counts") {
    for (const IntTuple& t : {IntTuple{3, 2}, IntTuple{2, 1}, IntTuple{-2, -1},
                              IntTuple{1, 3}}) {
        auto base = certify_bounded(t, Domain::Integers, 3, 1);
        for (int workers : {2, 8}) {
            auto other = certify_bounded(t, Domain::Integers, 3, workers);
            CHECK(base.counterexamples == other.counterexamples);
            CHECK(base.confirmations == other.confirmations);
            CHECK(find_counterexample(t, Domain::Integers, 3, workers) ==
                  find_counterexample(t, Domain::Integers, 3, 1));
        }
    }
}

TEST_CASE("certify_bounded") {
    SearchReport rep = certify_bounded(IntTuple{1}, Domain::Integers, 3);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.confirmations == 1);
    CHECK(rep.exhausted);

    rep = certify_bounded(IntTuple{3, 2}, Domain::Integers, 1);
    CHECK(rep.confirmations == 0);
    REQUIRE(rep.counterexamples.size() == 9);
    auto want = first_tuples(2, Domain::Integers, 9);
    for (size_t i = 0; i < 9; ++i) CHECK(rep.counterexamples[i] == want[i]);

    std::string text = format_report(rep);
    CHECK(text.find("tuple: 3 2") != std::string::npos);
    CHECK(text.find("domain: Z") != std::string::npos);
    CHECK(text.find("exhausted: true") != std::string::npos);
    CHECK(text.find("confirmations: 0") != std::string::npos);
}

TEST_CASE("certify_bounded finds the quartic witnesses in the 13-entry tuple") {
    // The largest trial coordinate of the two confirming solutions is 164.
    SearchReport rep = certify_bounded(paper_tuple(BuiltinTuple::B13Pos),
                                       Domain::Positive, 170);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.confirmations == 2);
    CHECK(rep.exhausted);
}
