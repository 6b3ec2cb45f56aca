#include "qdcs/cslcs.hpp"

#include <algorithm>
#include <map>

namespace qdcs {

bool check_group(const ClosureModel& model, const PointSet& a, const PointSet& b,
                 PointSet* component, GroupStats* stats, std::optional<uint32_t> start) {
    const QuasiDiscreteSpace& space = model.space();
    const uint32_t n = space.point_count();
    if (a.universe_size() != n || b.universe_size() != n)
        throw Error("check_group: operand set does not fit the model");
    if (a.empty()) throw Error("check_group: A must be non-empty");
    if (!a.is_subset_of(b)) throw Error("check_group: A must be a subset of B");
    uint32_t root = start.value_or(a.min_member());
    if (!a.contains(root)) throw Error("check_group: start point must belong to A");

    constexpr uint32_t kUndef = UINT32_MAX;
    std::vector<uint32_t> index(n, kUndef), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<uint32_t> scc_stack;

    struct Frame {
        uint32_t v;
        size_t edge_i;
    };
    std::vector<Frame> frames;
    uint32_t clock = 0;

    auto push = [&](uint32_t v) {
        index[v] = lowlink[v] = clock++;
        scc_stack.push_back(v);
        on_stack[v] = 1;
        frames.push_back({v, 0});
        if (stats) ++stats->pushes;
    };
    push(root);

    while (!frames.empty()) {
        Frame& fr = frames.back();
        uint32_t v = fr.v;
        std::span<const uint32_t> succ = space.post(v);
        if (fr.edge_i < succ.size()) {
            uint32_t w = succ[fr.edge_i++];
            if (!b.contains(w)) continue;  // stay inside the induced subgraph
            if (stats) ++stats->edge_traversals;
            if (index[w] == kUndef) {
                push(w);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
            // else: cross edge into an already-popped component; ignore.
            continue;
        }
        frames.pop_back();
        if (!frames.empty()) {
            uint32_t p = frames.back().v;
            lowlink[p] = std::min(lowlink[p], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
            // v roots a component: pop it, counting points of A as we go so no
            // secondary component set is ever materialized.
            uint32_t a_hits = 0;
            PointSet members(component ? n : 0);
            for (;;) {
                uint32_t w = scc_stack.back();
                scc_stack.pop_back();
                on_stack[w] = 0;
                if (a.contains(w)) ++a_hits;
                if (component) members.insert(w);
                if (w == v) break;
            }
            if (a_hits > 0) {
                if (component) *component = std::move(members);
                return a_hits == a.count();
            }
        }
    }
    // The start point belongs to A, so its own component decides before the
    // stack can drain.
    throw Error("check_group: search ended without classifying the start point");
}

namespace {

void gather_individuals(const FormulaArena& arena, CollectiveFormula psi,
                        std::vector<IndividualFormula>& out) {
    switch (arena.op(psi)) {
        case CollectiveOp::Top:
            return;
        case CollectiveOp::Not:
            gather_individuals(arena, arena.coll_left(psi), out);
            return;
        case CollectiveOp::And:
            gather_individuals(arena, arena.coll_left(psi), out);
            gather_individuals(arena, arena.coll_right(psi), out);
            return;
        case CollectiveOp::Share:
            out.push_back(arena.individual_of(psi));
            gather_individuals(arena, arena.coll_left(psi), out);
            return;
        case CollectiveOp::Group:
            out.push_back(arena.individual_of(psi));
            return;
    }
}

bool eval_collective(const ClosureModel& model, const FormulaArena& arena, const PointSet& a,
                     CollectiveFormula psi, const std::map<uint32_t, const PointSet*>& ind_sat) {
    switch (arena.op(psi)) {
        case CollectiveOp::Top:
            return true;
        case CollectiveOp::Not:
            return !eval_collective(model, arena, a, arena.coll_left(psi), ind_sat);
        case CollectiveOp::And:
            return eval_collective(model, arena, a, arena.coll_left(psi), ind_sat) &&
                   eval_collective(model, arena, a, arena.coll_right(psi), ind_sat);
        case CollectiveOp::Share: {
            PointSet filtered = a & *ind_sat.at(arena.individual_of(psi).id);
            return eval_collective(model, arena, filtered, arena.coll_left(psi), ind_sat);
        }
        case CollectiveOp::Group: {
            if (a.empty()) return true;
            const PointSet& b = *ind_sat.at(arena.individual_of(psi).id);
            if (!a.is_subset_of(b)) return false;
            return check_group(model, a, b);
        }
    }
    throw Error("eval_collective: unreachable");
}

}  // namespace

bool sat_collective(const ClosureModel& model, const FormulaArena& arena, const PointSet& a,
                    CollectiveFormula psi) {
    if (a.universe_size() != model.space().point_count())
        throw Error("sat_collective: operand set does not fit the model");
    std::vector<IndividualFormula> roots;
    gather_individuals(arena, psi, roots);
    std::vector<PointSet> tables = sat_many(model, arena, roots);
    std::map<uint32_t, const PointSet*> ind_sat;
    for (size_t i = 0; i < roots.size(); ++i) ind_sat.emplace(roots[i].id, &tables[i]);
    return eval_collective(model, arena, a, psi, ind_sat);
}

}  // namespace qdcs
