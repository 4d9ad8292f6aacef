#include "bnk/solver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bnk/enumerate.hpp"

namespace bnk {

std::string format_relation_ref(const RelationRef& r) {
    std::ostringstream out;
    switch (r.kind) {
        case RelationRef::Kind::Unit: out << "U " << r.i; break;
        case RelationRef::Kind::Add: out << "A " << r.i << ' ' << r.j << ' ' << r.k; break;
        case RelationRef::Kind::Mul: out << "M " << r.i << ' ' << r.j << ' ' << r.k; break;
    }
    return out.str();
}

namespace {

// Worklist propagation over one relation system. Assignments are undone by
// trail rollback, so one engine serves an entire depth-first search.
class Engine {
  public:
    Engine(const RelationSystem& r, Domain dom) : n_(r.n), dom_(dom) {
        for (int i : r.units) rels_.push_back({RelationRef::Kind::Unit, i, 0, 0});
        for (const Triple& t : r.adds)
            rels_.push_back({RelationRef::Kind::Add, t.i, t.j, t.k});
        for (const Triple& t : r.muls)
            rels_.push_back({RelationRef::Kind::Mul, t.i, t.j, t.k});
        val_.assign(static_cast<size_t>(n_) + 1, Integer(0));
        assigned_.assign(static_cast<size_t>(n_) + 1, 0);
        watch_.assign(static_cast<size_t>(n_) + 1, {});
        for (size_t id = 0; id < rels_.size(); ++id) {
            const RelationRef& rel = rels_[id];
            int idx[3] = {rel.i, rel.j, rel.k};
            int cnt = rel.kind == RelationRef::Kind::Unit ? 1 : 3;
            for (int p = 0; p < cnt; ++p) {
                bool dup = false;
                for (int q = 0; q < p; ++q) dup = dup || idx[q] == idx[p];
                if (!dup) watch_[static_cast<size_t>(idx[p])].push_back(static_cast<int>(id));
            }
        }
    }

    int arity() const { return n_; }
    bool is_assigned(int v) const { return assigned_[static_cast<size_t>(v)] != 0; }
    const Integer& value(int v) const { return val_[static_cast<size_t>(v)]; }
    const std::optional<RelationRef>& conflict() const { return conflict_; }

    size_t mark() const { return trail_.size(); }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            assigned_[static_cast<size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
        conflict_.reset();
        pending_.clear();
    }

    // Trial-assigns an unassigned variable and runs to fixpoint. False on
    // conflict.
    bool assign_and_propagate(int v, const Integer& x) {
        if (!set_value(v, x, {RelationRef::Kind::Unit, v, 0, 0})) return false;
        return drain();
    }

    // Records an input value without propagating; seeds are set before any
    // relation fires so they can never collide with forced values.
    void seed(int v, const Integer& x) {
        set_value(v, x, {RelationRef::Kind::Unit, v, 0, 0});
    }

    // Applies every relation once, then runs to fixpoint.
    bool propagate_all() {
        for (size_t id = 0; id < rels_.size(); ++id)
            if (!apply(static_cast<int>(id))) return false;
        return drain();
    }

    int first_unassigned() const {
        for (int v = 1; v <= n_; ++v)
            if (!assigned_[static_cast<size_t>(v)]) return v;
        return 0;
    }

    std::vector<int> free_indices() const {
        std::vector<int> out;
        for (int v = 1; v <= n_; ++v)
            if (!assigned_[static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }

    std::vector<Integer> snapshot() const {
        return std::vector<Integer>(val_.begin() + 1, val_.end());
    }

    size_t assigned_count() const { return trail_.size(); }

  private:
    bool set_value(int v, const Integer& x, const RelationRef& cause) {
        if (!domain_contains(dom_, x)) {
            conflict_ = cause;
            return false;
        }
        size_t uv = static_cast<size_t>(v);
        val_[uv] = x;
        assigned_[uv] = 1;
        trail_.push_back(v);
        for (int id : watch_[uv]) pending_.push_back(id);
        return true;
    }

    bool drain() {
        while (!pending_.empty()) {
            int id = pending_.back();
            pending_.pop_back();
            if (!apply(id)) return false;
        }
        return true;
    }

    bool fail(const RelationRef& rel) {
        conflict_ = rel;
        return false;
    }

    bool apply(int id) {
        const RelationRef& rel = rels_[static_cast<size_t>(id)];
        switch (rel.kind) {
            case RelationRef::Kind::Unit: {
                if (is_assigned(rel.i))
                    return value(rel.i) == 1 ? true : fail(rel);
                return set_value(rel.i, Integer(1), rel);
            }
            case RelationRef::Kind::Add: return apply_add(rel);
            case RelationRef::Kind::Mul: return apply_mul(rel);
        }
        return true;
    }

    bool apply_add(const RelationRef& rel) {
        const bool ai = is_assigned(rel.i), aj = is_assigned(rel.j),
                   ak = is_assigned(rel.k);
        if (ai && aj && ak) {
            t1_ = value(rel.i) + value(rel.j);
            return t1_ == value(rel.k) ? true : fail(rel);
        }
        // Solve exactly when one distinct index is undetermined.
        int u = 0;
        for (int idx : {rel.i, rel.j, rel.k}) {
            if (is_assigned(idx)) continue;
            if (u != 0 && u != idx) return true;  // two unknowns, nothing to force
            u = idx;
        }
        long c = (rel.i == u) + (rel.j == u) - (rel.k == u);
        t1_ = 0;
        if (rel.i != u) t1_ -= value(rel.i);
        if (rel.j != u) t1_ -= value(rel.j);
        if (rel.k != u) t1_ += value(rel.k);
        if (c == 0) return t1_ == 0 ? true : fail(rel);
        if (c == 2) {
            if (is_odd(t1_)) return fail(rel);
            t1_ /= 2;
        } else if (c == -1) {
            t1_ = -t1_;
        }
        return set_value(u, t1_, rel);
    }

    bool apply_mul(const RelationRef& rel) {
        const bool ai = is_assigned(rel.i), aj = is_assigned(rel.j),
                   ak = is_assigned(rel.k);
        if (ai && aj) {
            t1_ = value(rel.i) * value(rel.j);
            if (ak) return t1_ == value(rel.k) ? true : fail(rel);
            return set_value(rel.k, t1_, rel);
        }
        if (!ak || (!ai && !aj)) return true;
        const int fi = ai ? rel.i : rel.j;
        const int u = ai ? rel.j : rel.i;
        const Integer& f = value(fi);
        const Integer& p = value(rel.k);
        if (f == 0) return p == 0 ? true : fail(rel);
        if (!divides(f, p)) return fail(rel);
        return set_value(u, exact_div(p, f), rel);
    }

    int n_;
    Domain dom_;
    std::vector<RelationRef> rels_;
    std::vector<std::vector<int>> watch_;
    std::vector<Integer> val_;
    std::vector<char> assigned_;
    std::vector<int> trail_;
    std::vector<int> pending_;
    std::optional<RelationRef> conflict_;
    Integer t1_;
};

void check_partial(const RelationSystem& r, const Assignment& partial, Domain dom) {
    for (const auto& [idx, v] : partial.values()) {
        if (idx < 1 || idx > r.n)
            throw std::invalid_argument("propagate: variable " + std::to_string(idx) +
                                        " outside 1.." + std::to_string(r.n));
        if (!domain_contains(dom, v))
            throw std::invalid_argument("propagate: value of variable " +
                                        std::to_string(idx) + " violates domain " +
                                        domain_name(dom));
    }
}

}  // namespace

PropagationResult propagate(const RelationSystem& r, const Assignment& partial,
                            Domain domain) {
    check_partial(r, partial, domain);
    Engine e(r, domain);
    for (const auto& [idx, v] : partial.values()) e.seed(idx, v);
    size_t seeded = partial.values().size();
    bool ok = e.propagate_all();

    PropagationResult res;
    for (int v = 1; v <= r.n; ++v)
        if (e.is_assigned(v)) res.assignment.set(v, e.value(v));
    res.free_indices = e.free_indices();
    if (!ok) {
        res.status = PropagationStatus::Conflict;
        res.conflict = e.conflict();
    } else {
        res.status = e.assigned_count() > seeded ? PropagationStatus::Extended
                                                 : PropagationStatus::Stuck;
    }
    return res;
}

namespace {

// Full-tuple <=_n on raw value vectors.
bool raw_shell_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer sa = 0, sb = 0;
    for (const Integer& v : a) {
        Integer m = abs(v);
        if (m > sa) sa = m;
    }
    for (const Integer& v : b) {
        Integer m = abs(v);
        if (m > sb) sb = m;
    }
    if (sa != sb) return sa < sb;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

void dfs(Engine& e, const std::vector<long long>& trials,
         const std::function<void(const std::vector<Integer>&)>& on_solution) {
    int u = e.first_unassigned();
    if (u == 0) {
        on_solution(e.snapshot());
        return;
    }
    for (long long v : trials) {
        size_t m = e.mark();
        if (e.assign_and_propagate(u, to_integer(v))) dfs(e, trials, on_solution);
        e.rollback(m);
    }
}

// Runs the bounded search, sharding the root variable's trial values across
// workers. Worker results are merged in slice order, so the collected
// multiset is thread-count independent.
std::vector<std::vector<Integer>> search_all(const RelationSystem& r, Domain domain,
                                             long long bound, int threads) {
    if (bound < 0) throw std::invalid_argument("search: bound must be >= 0");
    if (threads < 1) threads = 1;
    const std::vector<long long> trials = value_order(domain, bound);

    {
        Engine probe(r, domain);
        if (!probe.propagate_all()) return {};
        if (probe.first_unassigned() == 0) return {probe.snapshot()};
    }

    auto run_slice = [&](int offset, int stride,
                         std::vector<std::vector<Integer>>& out) {
        Engine e(r, domain);
        if (!e.propagate_all()) return;
        int root = e.first_unassigned();
        for (size_t idx = static_cast<size_t>(offset); idx < trials.size();
             idx += static_cast<size_t>(stride)) {
            size_t m = e.mark();
            if (e.assign_and_propagate(root, to_integer(trials[idx])))
                dfs(e, trials, [&](const std::vector<Integer>& sol) {
                    out.push_back(sol);
                });
            e.rollback(m);
        }
    };

    if (threads == 1 || trials.size() < 2) {
        std::vector<std::vector<Integer>> out;
        run_slice(0, 1, out);
        return out;
    }

    const int w = std::min<int>(threads, static_cast<int>(trials.size()));
    std::vector<std::vector<std::vector<Integer>>> parts(static_cast<size_t>(w));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(w));
    for (int t = 0; t < w; ++t)
        pool.emplace_back(run_slice, t, w, std::ref(parts[static_cast<size_t>(t)]));
    for (auto& th : pool) th.join();

    std::vector<std::vector<Integer>> out;
    for (auto& p : parts)
        for (auto& sol : p) out.push_back(std::move(sol));
    return out;
}

Assignment to_assignment(const std::vector<Integer>& vals) {
    Assignment a;
    for (size_t i = 0; i < vals.size(); ++i)
        a.set(static_cast<int>(i) + 1, vals[i]);
    return a;
}

IntTuple to_tuple(std::vector<Integer> vals) {
    return IntTuple(std::move(vals));
}

}  // namespace

std::vector<Assignment> enumerate_solutions(const RelationSystem& r, Domain domain,
                                            long long bound, size_t limit,
                                            int threads) {
    auto sols = search_all(r, domain, bound, threads);
    std::sort(sols.begin(), sols.end(), raw_shell_less);
    if (sols.size() > limit) sols.resize(limit);
    std::vector<Assignment> out;
    out.reserve(sols.size());
    for (auto& s : sols) out.push_back(to_assignment(s));
    return out;
}

std::optional<IntTuple> find_counterexample(const IntTuple& t, Domain domain,
                                            long long bound, int threads) {
    if (!domain_contains(domain, t))
        throw std::invalid_argument("find_counterexample: tuple violates domain " +
                                    domain_name(domain));
    const RelationSystem r = extract(t);

    // If the first coordinate is forced, every solution shares it.
    PropagationResult base = propagate(r, Assignment(), domain);
    if (base.status == PropagationStatus::Conflict) return std::nullopt;
    if (base.assignment.has(1) && base.assignment.get(1) == t.at1(1))
        return std::nullopt;

    std::optional<std::vector<Integer>> best;
    for (auto& sol : search_all(r, domain, bound, threads)) {
        if (sol[0] == t.at1(1)) continue;
        if (!best || raw_shell_less(sol, *best)) best = std::move(sol);
    }
    if (!best) return std::nullopt;
    return to_tuple(std::move(*best));
}

SearchReport certify_bounded(const IntTuple& t, Domain domain, long long bound,
                             int threads) {
    if (!domain_contains(domain, t))
        throw std::invalid_argument("certify_bounded: tuple violates domain " +
                                    domain_name(domain));
    SearchReport rep;
    rep.tuple = t;
    rep.domain = domain;
    rep.bound = bound;
    const RelationSystem r = extract(t);
    std::vector<std::vector<Integer>> counter;
    for (auto& sol : search_all(r, domain, bound, threads)) {
        if (sol[0] == t.at1(1))
            ++rep.confirmations;
        else
            counter.push_back(std::move(sol));
    }
    std::sort(counter.begin(), counter.end(), raw_shell_less);
    rep.counterexamples.reserve(counter.size());
    for (auto& c : counter) rep.counterexamples.push_back(to_tuple(std::move(c)));
    rep.exhausted = true;
    return rep;
}

std::string format_report(const SearchReport& rep) {
    std::ostringstream out;
    out << "tuple: " << format_tuple(rep.tuple) << '\n'
        << "domain: " << domain_name(rep.domain) << '\n'
        << "bound: " << rep.bound << '\n'
        << "exhausted: " << (rep.exhausted ? "true" : "false") << '\n'
        << "confirmations: " << rep.confirmations << '\n'
        << "counterexamples: " << rep.counterexamples.size() << '\n';
    for (const IntTuple& c : rep.counterexamples) out << format_tuple(c) << '\n';
    return out.str();
}

}  // namespace bnk
