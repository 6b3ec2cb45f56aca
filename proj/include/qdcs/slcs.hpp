#pragma once

#include <string>
#include <vector>

#include "qdcs/logic.hpp"
#include "qdcs/space.hpp"

namespace qdcs {

// Work record of one worklist run: every frontier in processing order —
// including the initial one and the final empty one — plus counters that the
// once-per-point / once-per-edge complexity invariant is asserted against.
struct WorklistTrace {
    std::vector<std::vector<uint32_t>> frontiers;
    uint64_t points_enqueued = 0;
    uint64_t edges_traversed = 0;
};

// Decides `φ1 S φ2` given V = sat(φ1), Q = sat(φ2) by backward bad-point
// elimination: T starts as the outer boundary of V∪Q; each frontier point
// eliminates its predecessors in V, and eliminated points not in Q join the
// next frontier. Points of V∩Q can be eliminated but are never expanded.
PointSet check_surrounded(const ClosureModel& model, const PointSet& v, const PointSet& q,
                          WorklistTrace* trace = nullptr);

// Decides `φ1 P φ2` given V = sat(φ1), Q = sat(φ2) by forward flooding:
// T starts as C(V) ∩ Q (which keeps points of V itself that satisfy φ2),
// then repeatedly extends one step along R inside the unvisited part of Q.
PointSet check_propagation(const ClosureModel& model, const PointSet& v, const PointSet& q,
                           WorklistTrace* trace = nullptr);

// One entry per Surrounded/Propagation node, in evaluation order.
struct SatTraceEntry {
    std::string formula;
    WorklistTrace work;
};
using SatTrace = std::vector<SatTraceEntry>;

// Global model checking: returns {x | M,x ⊨ f}. Bottom-up over the arena, so
// every distinct subformula (by structural identity) is evaluated exactly once
// no matter how often it is shared.
PointSet sat(const ClosureModel& model, const FormulaArena& arena, IndividualFormula f,
             SatTrace* trace = nullptr);

// Same, for several roots over one shared subformula table: a subterm common
// to two roots is still evaluated only once.
std::vector<PointSet> sat_many(const ClosureModel& model, const FormulaArena& arena,
                               const std::vector<IndividualFormula>& roots,
                               SatTrace* trace = nullptr);

}  // namespace qdcs
