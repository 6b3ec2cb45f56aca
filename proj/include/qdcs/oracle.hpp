#pragma once

#include <optional>
#include <vector>

#include "qdcs/logic.hpp"
#include "qdcs/space.hpp"

namespace qdcs {

// Ground-truth semantics by brute force, for differential testing only.
// Capped at 12 points (subset enumeration); never shares code with the
// worklist/Tarjan checkers.

// A finite walk p0..pl; consecutive points are equal or related by R.
using Walk = std::vector<uint32_t>;

bool walk_in_relation(const QuasiDiscreteSpace& space, const Walk& walk);

// Direct definitional evaluation: booleans by truth tables, N by membership
// in the closure, S by enumerating every subset A ⊆ Sat(φ1) with x ∈ A and
// testing ∂⁺(A) ⊆ Sat(φ2), P by exhaustive walk search.
bool oracle_sat_individual(const ClosureModel& model, const FormulaArena& arena,
                           IndividualFormula f, uint32_t x);

// Def-level collective semantics; Group enumerates every B between A and
// Sat(φ) and tests path-connectedness.
bool oracle_sat_collective(const ClosureModel& model, const FormulaArena& arena, const PointSet& a,
                           CollectiveFormula psi);

// Shortest walk witnessing x ⊨ f1 P f2: starts at a point satisfying f1,
// ends at x, and every point after the start satisfies f2 (including x).
// nullopt when x does not satisfy the formula.
std::optional<Walk> oracle_propagation_witness(const ClosureModel& model, const FormulaArena& arena,
                                               IndividualFormula f1, IndividualFormula f2,
                                               uint32_t x);

}  // namespace qdcs
