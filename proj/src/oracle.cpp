#include "qdcs/oracle.hpp"

#include <algorithm>
#include <deque>

namespace qdcs {

namespace {

constexpr uint32_t kOracleCap = 12;

uint32_t require_small(const ClosureModel& model, const char* what) {
    uint32_t n = model.space().point_count();
    if (n > kOracleCap)
        throw Error(std::string(what) + ": oracle is limited to " + std::to_string(kOracleCap) +
                    " points, model has " + std::to_string(n));
    return n;
}

uint32_t mask_of(const PointSet& s) {
    uint32_t m = 0;
    s.for_each([&](uint32_t p) { m |= uint32_t{1} << p; });
    return m;
}

PointSet set_of(uint32_t mask, uint32_t n) {
    PointSet s(n);
    for (uint32_t p = 0; p < n; ++p)
        if (mask >> p & 1) s.insert(p);
    return s;
}

uint32_t post_mask(const QuasiDiscreteSpace& space, uint32_t m) {
    uint32_t out = 0;
    for (uint32_t x = 0; x < space.point_count(); ++x)
        if (m >> x & 1)
            for (uint32_t y : space.post(x)) out |= uint32_t{1} << y;
    return out;
}

uint32_t closure_mask(const QuasiDiscreteSpace& space, uint32_t m) {
    return m | post_mask(space, m);
}

// Satisfaction set of f as a bitmask, straight from the definitions.
uint32_t oracle_mask(const ClosureModel& model, const FormulaArena& arena, IndividualFormula f) {
    const QuasiDiscreteSpace& space = model.space();
    const uint32_t n = space.point_count();
    const uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    switch (arena.op(f)) {
        case IndividualOp::Atom:
            return mask_of(model.proposition(arena.atom_name(f)));
        case IndividualOp::Top:
            return full;
        case IndividualOp::Not:
            return full & ~oracle_mask(model, arena, arena.left(f));
        case IndividualOp::And:
            return oracle_mask(model, arena, arena.left(f)) &
                   oracle_mask(model, arena, arena.right(f));
        case IndividualOp::Near:
            return closure_mask(space, oracle_mask(model, arena, arena.left(f)));
        case IndividualOp::Surrounded: {
            uint32_t s1 = oracle_mask(model, arena, arena.left(f));
            uint32_t s2 = oracle_mask(model, arena, arena.right(f));
            // x ⊨ φ1 S φ2 iff some A ⊆ Sat(φ1) contains x with ∂⁺(A) ⊆ Sat(φ2).
            uint32_t result = 0;
            uint32_t a = s1;
            for (;;) {
                uint32_t outer = closure_mask(space, a) & ~a;
                if ((outer & ~s2) == 0) result |= a;
                if (a == 0) break;
                a = (a - 1) & s1;
            }
            return result;
        }
        case IndividualOp::Propagation: {
            uint32_t s1 = oracle_mask(model, arena, arena.left(f));
            uint32_t s2 = oracle_mask(model, arena, arena.right(f));
            // Endpoints of walks that start in Sat(φ1) and whose strictly
            // intermediate points all satisfy φ2; a walk extends through its
            // endpoint only if that endpoint may become an intermediate.
            uint32_t endpoints = s1;
            for (;;) {
                uint32_t grown = endpoints | post_mask(space, s1 | (endpoints & s2));
                if (grown == endpoints) break;
                endpoints = grown;
            }
            return endpoints & s2;
        }
    }
    throw Error("oracle_mask: unreachable");
}

}  // namespace

bool walk_in_relation(const QuasiDiscreteSpace& space, const Walk& walk) {
    if (walk.empty()) return false;
    for (uint32_t p : walk)
        if (p >= space.point_count()) return false;
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        uint32_t p = walk[i], q = walk[i + 1];
        if (p == q) continue;
        std::span<const uint32_t> row = space.post(p);
        if (!std::binary_search(row.begin(), row.end(), q)) return false;
    }
    return true;
}

bool oracle_sat_individual(const ClosureModel& model, const FormulaArena& arena,
                           IndividualFormula f, uint32_t x) {
    uint32_t n = require_small(model, "oracle_sat_individual");
    if (x >= n) throw Error("oracle_sat_individual: point out of range");
    return oracle_mask(model, arena, f) >> x & 1;
}

namespace {

bool oracle_coll(const ClosureModel& model, const FormulaArena& arena, uint32_t amask,
                 CollectiveFormula psi) {
    switch (arena.op(psi)) {
        case CollectiveOp::Top:
            return true;
        case CollectiveOp::Not:
            return !oracle_coll(model, arena, amask, arena.coll_left(psi));
        case CollectiveOp::And:
            return oracle_coll(model, arena, amask, arena.coll_left(psi)) &&
                   oracle_coll(model, arena, amask, arena.coll_right(psi));
        case CollectiveOp::Share:
            return oracle_coll(model, arena,
                               amask & oracle_mask(model, arena, arena.individual_of(psi)),
                               arena.coll_left(psi));
        case CollectiveOp::Group: {
            uint32_t b0 = oracle_mask(model, arena, arena.individual_of(psi));
            if (amask & ~b0) return false;  // some member of A falsifies φ
            const uint32_t n = model.space().point_count();
            // ∃B with A ⊆ B ⊆ Sat(φ) and B path-connected.
            uint32_t free = b0 & ~amask;
            uint32_t sub = free;
            for (;;) {
                if (is_path_connected(model.space(), set_of(amask | sub, n))) return true;
                if (sub == 0) break;
                sub = (sub - 1) & free;
            }
            return false;
        }
    }
    throw Error("oracle_coll: unreachable");
}

}  // namespace

bool oracle_sat_collective(const ClosureModel& model, const FormulaArena& arena, const PointSet& a,
                           CollectiveFormula psi) {
    uint32_t n = require_small(model, "oracle_sat_collective");
    if (a.universe_size() != n) throw Error("oracle_sat_collective: set does not fit the model");
    return oracle_coll(model, arena, mask_of(a), psi);
}

std::optional<Walk> oracle_propagation_witness(const ClosureModel& model, const FormulaArena& arena,
                                               IndividualFormula f1, IndividualFormula f2,
                                               uint32_t x) {
    uint32_t n = require_small(model, "oracle_propagation_witness");
    if (x >= n) throw Error("oracle_propagation_witness: point out of range");
    const QuasiDiscreteSpace& space = model.space();
    uint32_t s1 = oracle_mask(model, arena, f1);
    uint32_t s2 = oracle_mask(model, arena, f2);
    if (!(s2 >> x & 1)) return std::nullopt;
    if (s1 >> x & 1) return Walk{x};

    // BFS over (point, moved?) states: phase 0 = still at the start point,
    // phase 1 = at least one step taken. A state extends only when its point
    // can serve as a strict intermediate, i.e. phase 0 or satisfying f2.
    constexpr uint32_t kNone = UINT32_MAX;
    std::vector<uint32_t> parent(2 * n, kNone);
    std::vector<char> seen(2 * n, 0);
    std::deque<uint32_t> queue;
    for (uint32_t y = 0; y < n; ++y)
        if (s1 >> y & 1) {
            seen[2 * y] = 1;
            queue.push_back(2 * y);
        }
    while (!queue.empty()) {
        uint32_t state = queue.front();
        queue.pop_front();
        uint32_t p = state / 2, phase = state % 2;
        if (phase == 1 && !(s2 >> p & 1)) continue;  // dead end, cannot extend
        for (uint32_t q : space.post(p)) {
            uint32_t next = 2 * q + 1;
            if (seen[next]) continue;
            seen[next] = 1;
            parent[next] = state;
            if (q == x) {
                Walk w{q};
                for (uint32_t s = state; s != kNone; s = parent[s]) w.push_back(s / 2);
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace qdcs
