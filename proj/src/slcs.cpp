#include "qdcs/slcs.hpp"

#include <algorithm>

namespace qdcs {

namespace {

void check_operand(const ClosureModel& model, const PointSet& s, const char* what) {
    if (s.universe_size() != model.space().point_count())
        throw Error(std::string(what) + ": operand set does not fit the model");
}

void record_frontier(WorklistTrace* trace, const std::vector<uint32_t>& t) {
    if (trace) {
        trace->frontiers.push_back(t);
        trace->points_enqueued += t.size();
    }
}

}  // namespace

PointSet check_surrounded(const ClosureModel& model, const PointSet& v, const PointSet& q,
                          WorklistTrace* trace) {
    check_operand(model, v, "check_surrounded");
    check_operand(model, q, "check_surrounded");
    const QuasiDiscreteSpace& space = model.space();

    PointSet result = v;
    std::vector<uint32_t> t = boundary(space, v | q, BoundaryKind::outer).to_vector();
    record_frontier(trace, t);

    while (!t.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t x : t) {
            for (uint32_t y : space.pre(x)) {
                if (trace) ++trace->edges_traversed;
                if (result.contains(y)) {
                    // y has a path into ¬(φ1 ∨ φ2) — unless it satisfies φ2,
                    // in which case it is dropped from V but blocks the walk.
                    result.erase(y);
                    if (!q.contains(y)) next.push_back(y);
                }
            }
        }
        std::sort(next.begin(), next.end());
        t = std::move(next);
        record_frontier(trace, t);
    }
    return result;
}

PointSet check_propagation(const ClosureModel& model, const PointSet& v, const PointSet& q,
                           WorklistTrace* trace) {
    check_operand(model, v, "check_propagation");
    check_operand(model, q, "check_propagation");
    const QuasiDiscreteSpace& space = model.space();

    PointSet result = closure(space, v) & q;
    PointSet unvisited = q - result;
    std::vector<uint32_t> t = result.to_vector();
    record_frontier(trace, t);

    while (!t.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t x : t) {
            for (uint32_t y : space.post(x)) {
                if (trace) ++trace->edges_traversed;
                if (unvisited.contains(y)) {
                    unvisited.erase(y);
                    next.push_back(y);
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (uint32_t y : next) result.insert(y);
        t = std::move(next);
        record_frontier(trace, t);
    }
    return result;
}

std::vector<PointSet> sat_many(const ClosureModel& model, const FormulaArena& arena,
                               const std::vector<IndividualFormula>& roots, SatTrace* trace) {
    if (roots.empty()) return {};
    uint32_t max_id = 0;
    for (IndividualFormula f : roots) {
        arena.op(f);  // validates the handle
        max_id = std::max(max_id, f.id);
    }
    const uint32_t n = model.space().point_count();

    // Mark the subformulas actually reachable from the roots; children have
    // smaller ids, so one ascending pass over the marks evaluates bottom-up.
    std::vector<char> needed(max_id + 1, 0);
    std::vector<uint32_t> stack;
    auto mark = [&](IndividualFormula g) {
        if (!needed[g.id]) {
            needed[g.id] = 1;
            stack.push_back(g.id);
        }
    };
    for (IndividualFormula f : roots) mark(f);
    while (!stack.empty()) {
        IndividualFormula g{stack.back()};
        stack.pop_back();
        switch (arena.op(g)) {
            case IndividualOp::Atom:
            case IndividualOp::Top:
                break;
            case IndividualOp::Not:
            case IndividualOp::Near:
                mark(arena.left(g));
                break;
            default:
                mark(arena.left(g));
                mark(arena.right(g));
        }
    }

    std::vector<PointSet> table(max_id + 1);
    for (uint32_t i = 0; i <= max_id; ++i) {
        if (!needed[i]) continue;
        IndividualFormula g{i};
        switch (arena.op(g)) {
            case IndividualOp::Atom:
                table[i] = model.proposition(arena.atom_name(g));
                break;
            case IndividualOp::Top:
                table[i] = PointSet::full(n);
                break;
            case IndividualOp::Not:
                table[i] = table[arena.left(g).id].complement();
                break;
            case IndividualOp::And:
                table[i] = table[arena.left(g).id] & table[arena.right(g).id];
                break;
            case IndividualOp::Near:
                table[i] = closure(model.space(), table[arena.left(g).id]);
                break;
            case IndividualOp::Surrounded:
            case IndividualOp::Propagation: {
                WorklistTrace work;
                WorklistTrace* wp = trace ? &work : nullptr;
                const PointSet& l = table[arena.left(g).id];
                const PointSet& r = table[arena.right(g).id];
                table[i] = arena.op(g) == IndividualOp::Surrounded
                               ? check_surrounded(model, l, r, wp)
                               : check_propagation(model, l, r, wp);
                if (trace) trace->push_back({pretty(arena, g), std::move(work)});
                break;
            }
        }
    }
    std::vector<PointSet> out;
    out.reserve(roots.size());
    for (IndividualFormula f : roots) out.push_back(table[f.id]);
    return out;
}

PointSet sat(const ClosureModel& model, const FormulaArena& arena, IndividualFormula f,
             SatTrace* trace) {
    return std::move(sat_many(model, arena, {f}, trace).front());
}

}  // namespace qdcs
