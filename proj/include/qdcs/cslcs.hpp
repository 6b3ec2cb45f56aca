#pragma once

#include <optional>

#include "qdcs/logic.hpp"
#include "qdcs/slcs.hpp"
#include "qdcs/space.hpp"

namespace qdcs {

struct GroupStats {
    uint64_t pushes = 0;            // at most |B|
    uint64_t edge_traversals = 0;   // edges within B×B, at most once each
};

// True iff all of A lies in one strongly connected component of the subgraph
// induced by B — equivalently, iff some path-connected B' with A ⊆ B' ⊆ B
// exists. Requires ∅ ≠ A ⊆ B (the callers' guards); start defaults to min(A)
// and must belong to A. Iterative Tarjan search visiting successors in
// ascending order; the first component that contains any point of A decides
// the answer, and `component` (if non-null) receives it.
//
// Note the published pseudocode this follows skips the on-stack test on
// already-visited successors; without it a cross edge into a completed
// component corrupts lowlinks (e.g. edges x→a, x→b, b→a from start x make
// {x,b} pop as one component). The on-stack test is restored here.
bool check_group(const ClosureModel& model, const PointSet& a, const PointSet& b,
                 PointSet* component = nullptr, GroupStats* stats = nullptr,
                 std::optional<uint32_t> start = std::nullopt);

// Truth of M, A ⊨ psi. Share filters A through the individual checker; Group
// returns true on A = ∅, false when A ⊄ Sat(φ), and otherwise defers to
// check_group. All individual subformulas are evaluated once up front over a
// shared table.
bool sat_collective(const ClosureModel& model, const FormulaArena& arena, const PointSet& a,
                    CollectiveFormula psi);

}  // namespace qdcs
