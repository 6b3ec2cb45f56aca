#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qdcs/error.hpp"

namespace qdcs {

// Core individual grammar: a | TT | !f | f & f | N f | f S f | f P f.
enum class IndividualOp : uint8_t { Atom, Top, Not, And, Near, Surrounded, Propagation };

// Core collective grammar: TT | !c | c & c | f -< c | G f.
enum class CollectiveOp : uint8_t { Top, Not, And, Share, Group };

struct IndividualFormula {
    uint32_t id = UINT32_MAX;
    friend bool operator==(IndividualFormula, IndividualFormula) = default;
    friend auto operator<=>(IndividualFormula, IndividualFormula) = default;
};

struct CollectiveFormula {
    uint32_t id = UINT32_MAX;
    friend bool operator==(CollectiveFormula, CollectiveFormula) = default;
    friend auto operator<=>(CollectiveFormula, CollectiveFormula) = default;
};

// Hash-consing arena: structurally equal formulas built in the same arena get
// the same id, which is what the checker's subformula memoization keys on.
// Children always have smaller ids than their parents.
class FormulaArena {
public:
    IndividualFormula atom(std::string_view name);
    IndividualFormula top();
    IndividualFormula negation(IndividualFormula f);
    IndividualFormula conjunction(IndividualFormula l, IndividualFormula r);
    IndividualFormula near(IndividualFormula f);
    IndividualFormula surrounded(IndividualFormula l, IndividualFormula r);
    IndividualFormula propagation(IndividualFormula l, IndividualFormula r);

    CollectiveFormula coll_top();
    CollectiveFormula coll_negation(CollectiveFormula c);
    CollectiveFormula coll_conjunction(CollectiveFormula l, CollectiveFormula r);
    CollectiveFormula share(IndividualFormula f, CollectiveFormula c);
    CollectiveFormula group(IndividualFormula f);

    IndividualOp op(IndividualFormula f) const;
    const std::string& atom_name(IndividualFormula f) const;
    IndividualFormula left(IndividualFormula f) const;   // also the unary child
    IndividualFormula right(IndividualFormula f) const;

    CollectiveOp op(CollectiveFormula c) const;
    CollectiveFormula coll_left(CollectiveFormula c) const;   // also the unary child
    CollectiveFormula coll_right(CollectiveFormula c) const;
    IndividualFormula individual_of(CollectiveFormula c) const;  // Share/Group operand

    uint32_t individual_count() const { return static_cast<uint32_t>(inodes_.size()); }
    uint32_t collective_count() const { return static_cast<uint32_t>(cnodes_.size()); }

private:
    struct Node {
        uint8_t op;
        uint32_t a, b;
        friend bool operator<(const Node& x, const Node& y) {
            return std::tie(x.op, x.a, x.b) < std::tie(y.op, y.a, y.b);
        }
    };
    IndividualFormula intern_ind(IndividualOp op, uint32_t a, uint32_t b);
    CollectiveFormula intern_coll(CollectiveOp op, uint32_t a, uint32_t b);
    void check(IndividualFormula f) const;
    void check(CollectiveFormula c) const;

    std::vector<Node> inodes_, cnodes_;
    std::map<Node, uint32_t> iintern_, cintern_;
    std::vector<std::string> atom_names_;
    std::map<std::string, uint32_t, std::less<>> atom_intern_;
};

// Surface syntax before desugaring; covers the individual and collective
// layers plus every derived operator.
enum class SurfaceOp : uint8_t {
    Atom, Top, Bottom, Not, And, Or,
    Near, Interior, BoundaryFull, BoundaryInner, BoundaryOuter,
    Surrounded, Propagation, Until, Touch, Everywhere, Somewhere, PropagationBar,
    Share, Group, Forall, Exists, Empty, CollSurrounded, Partition
};

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

struct SurfaceTerm {
    SurfaceOp op;
    std::string atom;    // SurfaceOp::Atom only
    SurfacePtr lhs, rhs;
};

using MacroTable = std::map<std::string, SurfacePtr>;

// Tokens: TT FF ! & | N I S P U T E F Pbar boundary iboundary cboundary
// -< G forall exists empty CS PART, identifiers, #rrggbb color literals,
// parentheses. Precedence, tightest first: unary; &; |; the binary spatial
// operators (non-associative, chains are a parse error); -< (right-assoc).
// Identifiers found in `macros` are substituted by their bound term.
SurfacePtr parse_surface(std::string_view text, const MacroTable* macros = nullptr);

// Purely syntactic expansion of the derived operators into the core grammar.
// Raise errors when a collective construct appears in individual position and
// vice versa (atoms and spatial operators are not collective formulas).
IndividualFormula desugar_individual(FormulaArena& arena, const SurfacePtr& term);
CollectiveFormula desugar_collective(FormulaArena& arena, const SurfacePtr& term);

// parse + desugar.
IndividualFormula parse_individual(FormulaArena& arena, std::string_view text,
                                   const MacroTable* macros = nullptr);
CollectiveFormula parse_collective(FormulaArena& arena, std::string_view text,
                                   const MacroTable* macros = nullptr);

// Core pretty-printers; output reparses to the identical node.
std::string pretty(const FormulaArena& arena, IndividualFormula f);
std::string pretty(const FormulaArena& arena, CollectiveFormula c);

// Inductive tree size: atoms and TT count 1, unary operators add 1, binary
// operators (including Share) add 1 plus both children.
uint64_t formula_size(const FormulaArena& arena, IndividualFormula f);
uint64_t formula_size(const FormulaArena& arena, CollectiveFormula c);

std::set<std::string> collect_atoms(const FormulaArena& arena, IndividualFormula f);
std::set<std::string> collect_atoms(const FormulaArena& arena, CollectiveFormula c);

}  // namespace qdcs
