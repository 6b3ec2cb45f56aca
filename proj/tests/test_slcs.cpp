#include "doctest.h"

#include <deque>
#include <random>
#include <vector>

#include "qdcs/slcs.hpp"

#include "helpers.hpp"

using namespace qdcs;
using qdcs::testing::paper10;
using qdcs::testing::random_model;
using qdcs::testing::set_of;

namespace {

PointSet reachable_from(const QuasiDiscreteSpace& s, uint32_t x) {
    PointSet seen(s.point_count());
    seen.insert(x);
    std::deque<uint32_t> queue{x};
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t v : s.post(u))
            if (!seen.contains(v)) {
                seen.insert(v);
                queue.push_back(v);
            }
    }
    return seen;
}

// Path reading of reachability: x qualifies iff x satisfies f2, or some edge
// from x enters a point of sat(f1) that reaches sat(f1) ∩ sat(f2) without
// leaving sat(f1).
PointSet until_reference(const QuasiDiscreteSpace& s, const PointSet& s1, const PointSet& s2) {
    const uint32_t n = s.point_count();
    PointSet t = s1 & s2;
    std::deque<uint32_t> queue;
    t.for_each([&](uint32_t p) { queue.push_back(p); });
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t u : s.pre(v))
            if (s1.contains(u) && !t.contains(u)) {
                t.insert(u);
                queue.push_back(u);
            }
    }
    PointSet result = s2;
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t v : s.post(x))
            if (t.contains(v)) {
                result.insert(x);
                break;
            }
    return result;
}

// Path reading of propagation, decided pointwise by a backward search from
// the candidate endpoint through sat(f2).
PointSet propagation_reference(const QuasiDiscreteSpace& s, const PointSet& s1,
                               const PointSet& s2) {
    const uint32_t n = s.point_count();
    PointSet result(n);
    for (uint32_t x = 0; x < n; ++x) {
        if (!s2.contains(x)) continue;
        if (s1.contains(x)) {
            result.insert(x);
            continue;
        }
        PointSet seen(n);
        seen.insert(x);
        std::deque<uint32_t> queue{x};
        bool found = false;
        while (!queue.empty() && !found) {
            uint32_t w = queue.front();
            queue.pop_front();
            for (uint32_t y : s.pre(w)) {
                if (s1.contains(y)) {
                    found = true;
                    break;
                }
                if (s2.contains(y) && !seen.contains(y)) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        if (found) result.insert(x);
    }
    return result;
}

}  // namespace

TEST_CASE("satisfying sets on the ten-node fixture") {
    ClosureModel m = paper10();
    FormulaArena arena;

    CHECK(sat(m, arena, parse_individual(arena, "TT")) == PointSet::full(10));
    CHECK(sat(m, arena, parse_individual(arena, "FF")) == PointSet(10));
    CHECK(sat(m, arena, parse_individual(arena, "N yellow")) ==
          set_of(10, {0, 1, 2, 3, 4, 5, 8, 9}));
    CHECK(sat(m, arena, parse_individual(arena, "yellow S red")) == set_of(10, {0, 1, 2}));
    CHECK(sat(m, arena, parse_individual(arena, "nowhere")) == PointSet(10));
    CHECK(sat(m, arena, parse_individual(arena, "!yellow")) ==
          m.proposition("yellow").complement());
    CHECK(sat(m, arena, parse_individual(arena, "yellow & red")) == PointSet(10));
    CHECK(sat(m, arena, parse_individual(arena, "I yellow")) == set_of(10, {0, 1}));
}

TEST_CASE("surrounded worklist trace matches the published narrative") {
    ClosureModel m = paper10();
    FormulaArena arena;
    SatTrace trace;
    PointSet result = sat(m, arena, parse_individual(arena, "yellow S red"), &trace);

    CHECK(result == set_of(10, {0, 1, 2}));
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].formula == "yellow S red");
    const WorklistTrace& work = trace[0].work;
    REQUIRE(work.frontiers.size() == 4);
    CHECK(work.frontiers[0] == std::vector<uint32_t>{5, 6});
    CHECK(work.frontiers[1] == std::vector<uint32_t>{8});
    CHECK(work.frontiers[2] == std::vector<uint32_t>{9});
    CHECK(work.frontiers[3].empty());
    CHECK(work.points_enqueued == 4);
    CHECK(work.edges_traversed == 13);
}

TEST_CASE("propagation worklist trace") {
    ClosureModel m = paper10();
    FormulaArena arena;
    SatTrace trace;
    PointSet result = sat(m, arena, parse_individual(arena, "red P yellow"), &trace);

    CHECK(result == set_of(10, {0, 1, 2, 8, 9}));
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].formula == "red P yellow");
    const WorklistTrace& work = trace[0].work;
    REQUIRE(work.frontiers.size() == 3);
    CHECK(work.frontiers[0] == std::vector<uint32_t>{2, 8, 9});
    CHECK(work.frontiers[1] == std::vector<uint32_t>{0, 1});
    CHECK(work.frontiers[2].empty());
    CHECK(work.points_enqueued == 5);
    CHECK(work.edges_traversed == 13);
}

TEST_CASE("surrounded edge cases") {
    ClosureModel m = paper10();
    const PointSet x = PointSet::full(10);
    const PointSet none(10);
    const PointSet yellow = m.proposition("yellow");

    // No blockers at all: on a strongly connected space every proper region
    // leaks, so only V = X survives.
    CHECK(check_surrounded(m, x, none) == x);
    CHECK(check_surrounded(m, yellow, none) == none);

    // Blockers that overlap V: an overlapping point can be eliminated from
    // the result yet still blocks walks through it.
    CHECK(check_surrounded(m, yellow, yellow | m.proposition("red")) ==
          set_of(10, {0, 1, 2, 9}));

    // V inside Q.
    CHECK(check_surrounded(m, set_of(10, {3}), x - set_of(10, {7})) == set_of(10, {3}));

    CHECK(check_surrounded(m, none, none) == none);
    CHECK_THROWS_AS(check_surrounded(m, PointSet(5), none), Error);
}

TEST_CASE("propagation edge cases") {
    ClosureModel m = paper10();
    const PointSet x = PointSet::full(10);
    const PointSet none(10);

    CHECK(check_propagation(m, none, x) == none);
    CHECK(check_propagation(m, x, x) == x);
    CHECK(check_propagation(m, x, none) == none);
    CHECK_THROWS_AS(check_propagation(m, none, PointSet(4)), Error);
}

TEST_CASE("containment properties on random models") {
    std::mt19937 rng(20260201);
    for (int round = 0; round < 300; ++round) {
        uint32_t n = std::uniform_int_distribution<uint32_t>(1, 12)(rng);
        ClosureModel m = random_model(rng, n, 0.3, {"a", "b"}, rng() % 2 == 0);
        PointSet v = m.proposition("a");
        PointSet q = m.proposition("b");

        WorklistTrace st;
        PointSet s = check_surrounded(m, v, q, &st);
        CHECK(s.is_subset_of(v));
        CHECK(st.points_enqueued <= n);
        CHECK(st.edges_traversed <= m.space().pair_count());
        REQUIRE(!st.frontiers.empty());
        CHECK(st.frontiers.back().empty());

        // Frontiers never repeat a point: the once-per-point discipline.
        PointSet seen(n);
        for (const auto& frontier : st.frontiers)
            for (uint32_t p : frontier) {
                CHECK_FALSE(seen.contains(p));
                seen.insert(p);
            }

        // A fully blocking Q keeps all of V.
        CHECK(check_surrounded(m, v, boundary(m.space(), v, BoundaryKind::outer)) == v);

        WorklistTrace pt;
        PointSet r = check_propagation(m, v, q, &pt);
        CHECK(r.is_subset_of(q));
        CHECK((closure(m.space(), v) & q).is_subset_of(r));
        CHECK(pt.points_enqueued <= n);
        CHECK(pt.edges_traversed <= m.space().pair_count());
    }
}

TEST_CASE("shared subformulas are evaluated once") {
    ClosureModel m = paper10();
    FormulaArena arena;
    IndividualFormula shared = parse_individual(arena, "(yellow S red) & (yellow S red)");
    SatTrace trace;
    PointSet r = sat(m, arena, shared, &trace);
    CHECK(r == set_of(10, {0, 1, 2}));
    CHECK(trace.size() == 1);  // one Surrounded evaluation despite two uses

    IndividualFormula f1 = parse_individual(arena, "yellow S red");
    IndividualFormula f2 = parse_individual(arena, "N (yellow S red)");
    SatTrace trace2;
    auto results = sat_many(m, arena, {f1, f2}, &trace2);
    REQUIRE(results.size() == 2);
    CHECK(results[0] == set_of(10, {0, 1, 2}));
    CHECK(results[1] == closure(m.space(), results[0]));
    CHECK(trace2.size() == 1);  // the S node is shared across both roots

    FormulaArena other;
    CHECK_THROWS_AS(sat(m, other, f1), Error);  // handle from a different arena
}

TEST_CASE("derived reachability operators obey their path semantics") {
    std::mt19937 rng(20260202);
    FormulaArena arena;
    IndividualFormula until = parse_individual(arena, "a U b");
    IndividualFormula everywhere = parse_individual(arena, "E a");
    IndividualFormula somewhere = parse_individual(arena, "F a");
    IndividualFormula apart = parse_individual(arena, "a Pbar b");

    for (int round = 0; round < 250; ++round) {
        uint32_t n = std::uniform_int_distribution<uint32_t>(1, 10)(rng);
        ClosureModel m = random_model(rng, n, round % 2 ? 0.3 : 0.5, {"a", "b"}, rng() % 2 == 0);
        const auto& space = m.space();
        PointSet s1 = m.proposition("a");
        PointSet s2 = m.proposition("b");

        CHECK(sat(m, arena, until) == until_reference(space, s1, s2));

        PointSet everywhere_ref(n), somewhere_ref(n);
        for (uint32_t x = 0; x < n; ++x) {
            PointSet reach = reachable_from(space, x);
            if (reach.is_subset_of(s1)) everywhere_ref.insert(x);
            if (reach.intersects(s1)) somewhere_ref.insert(x);
        }
        CHECK(sat(m, arena, everywhere) == everywhere_ref);
        CHECK(sat(m, arena, somewhere) == somewhere_ref);

        // x is kept apart from a by b: either x satisfies b, or no walk from
        // an a-point reaches x with all strictly-intermediate points
        // avoiding b.
        PointSet apart_ref = propagation_reference(space, s1, s2.complement()).complement();
        CHECK(sat(m, arena, apart) == apart_ref);

        // The propagation checker itself against the pointwise reference.
        CHECK(check_propagation(m, s1, s2) == propagation_reference(space, s1, s2));
    }
}
