#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdcs/point_set.hpp"

namespace qdcs {

// Finite quasi-discrete closure space: points 0..n-1 plus a binary relation R,
// stored as mutually transposed CSR adjacency (forward = post, backward = pre).
// Self-loops are never stored; rows are sorted ascending and duplicate-free.
// Immutable after construction.
class QuasiDiscreteSpace {
public:
    QuasiDiscreteSpace() = default;

    // symmetric=true inserts the reverse of every pair as well.
    static QuasiDiscreteSpace from_edges(
        uint32_t point_count,
        const std::vector<std::pair<uint32_t, uint32_t>>& edges,
        bool symmetric,
        std::vector<std::string> labels = {});

    uint32_t point_count() const { return n_; }
    // Number of stored directed pairs.
    uint64_t pair_count() const { return fwd_.targets.size(); }

    std::span<const uint32_t> post(uint32_t x) const { return fwd_.row(x); }
    std::span<const uint32_t> pre(uint32_t x) const { return bwd_.row(x); }

    // True iff R equals its transpose (checked row-wise; rows are sorted).
    bool is_symmetric() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(uint32_t x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    struct Csr {
        std::vector<uint64_t> offsets;  // size n+1
        std::vector<uint32_t> targets;
        std::span<const uint32_t> row(uint32_t x) const {
            return {targets.data() + offsets[x], targets.data() + offsets[x + 1]};
        }
    };
    static Csr build_csr(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& pairs, bool reversed);

    uint32_t n_ = 0;
    Csr fwd_, bwd_;
    std::vector<std::string> labels_;
};

// A closure model pairs a space with a valuation from atomic-proposition
// names to the point sets where they hold.
class ClosureModel {
public:
    ClosureModel() = default;
    ClosureModel(QuasiDiscreteSpace space, std::map<std::string, PointSet> valuation);

    const QuasiDiscreteSpace& space() const { return space_; }
    const std::map<std::string, PointSet>& valuation() const { return valuation_; }

    // Unknown atomic propositions evaluate to the empty set.
    PointSet proposition(const std::string& name) const;

private:
    QuasiDiscreteSpace space_;
    std::map<std::string, PointSet> valuation_;
};

enum class BoundaryKind { full, inner, outer };
enum class Direction { pre, post };

// C_R(A) = A union the successors of every member.
PointSet closure(const QuasiDiscreteSpace& space, const PointSet& a);

// I(A) = {x in A | pre(x) subset of A}; equals complement(closure(complement(A))).
PointSet interior(const QuasiDiscreteSpace& space, const PointSet& a);

// full: C(A) \ I(A); inner: A \ I(A); outer: C(A) \ A.
PointSet boundary(const QuasiDiscreteSpace& space, const PointSet& a, BoundaryKind kind);

PointSet adjacent(const QuasiDiscreteSpace& space, uint32_t x, Direction dir);

// {x} union pre(x): the least neighbourhood of x.
PointSet minimal_neighbourhood(const QuasiDiscreteSpace& space, uint32_t x);

// Space on Y's points, reindexed densely in ascending order of the original
// indices; the index mapping is retained in the labels (original label, or the
// original index in decimal when the source space is unlabelled).
QuasiDiscreteSpace subspace(const QuasiDiscreteSpace& space, const PointSet& y);

// Disjoint union; s2's points are offset by s1.point_count(). No cross edges.
QuasiDiscreteSpace coproduct(const QuasiDiscreteSpace& s1, const QuasiDiscreteSpace& s2);

// True iff A is empty or the subgraph induced by A is strongly connected.
bool is_path_connected(const QuasiDiscreteSpace& space, const PointSet& a);

// True iff A admits no partition into non-empty A1, A2 with
// C(A1) disjoint from A2 and A1 disjoint from C(A2) (closure taken in the
// subspace on A). Exhaustive for |A| <= 20; linear special case for A = X on
// symmetric spaces; larger inputs raise a size error.
bool is_separation_connected(const QuasiDiscreteSpace& space, const PointSet& a);

// True iff the reflexive closure of R is transitive (closure idempotent).
bool is_topological(const QuasiDiscreteSpace& space);

// width x height pixel grid, row-major from the top-left, symmetric
// 4-adjacency: points at unit Euclidean distance are related.
QuasiDiscreteSpace build_grid_4adj(uint32_t width, uint32_t height);

// Symmetric relation linking distinct positions at Euclidean distance <= delta.
// Compared as squared distances; no square root, no tolerance.
QuasiDiscreteSpace build_delta_graph(const std::vector<std::pair<double, double>>& coords, double delta);

}  // namespace qdcs
