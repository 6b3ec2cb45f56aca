#include "qdcs/space.hpp"

#include <algorithm>
#include <deque>

namespace qdcs {

namespace {

void check_set(const QuasiDiscreteSpace& space, const PointSet& a, const char* op) {
    if (a.universe_size() != space.point_count())
        throw Error(std::string(op) + ": set universe " + std::to_string(a.universe_size()) +
                    " does not match space with " + std::to_string(space.point_count()) + " points");
}

void check_point(const QuasiDiscreteSpace& space, uint32_t x, const char* op) {
    if (x >= space.point_count())
        throw Error(std::string(op) + ": point " + std::to_string(x) + " out of range (space has " +
                    std::to_string(space.point_count()) + " points)");
}

}  // namespace

QuasiDiscreteSpace::Csr QuasiDiscreteSpace::build_csr(
    uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& pairs, bool reversed) {
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const auto& [a, b] : pairs) csr.offsets[(reversed ? b : a) + 1]++;
    for (uint32_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.resize(pairs.size());
    std::vector<uint64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (const auto& [a, b] : pairs) {
        uint32_t src = reversed ? b : a;
        csr.targets[cursor[src]++] = reversed ? a : b;
    }
    // Sort each row, then compact duplicates in place.
    uint64_t write = 0;
    std::vector<uint64_t> new_offsets(n + 1, 0);
    for (uint32_t x = 0; x < n; ++x) {
        uint64_t begin = csr.offsets[x], end = csr.offsets[x + 1];
        std::sort(csr.targets.begin() + begin, csr.targets.begin() + end);
        new_offsets[x] = write;
        for (uint64_t i = begin; i < end; ++i)
            if (i == begin || csr.targets[i] != csr.targets[i - 1])
                csr.targets[write++] = csr.targets[i];
    }
    new_offsets[n] = write;
    csr.targets.resize(write);
    csr.offsets = std::move(new_offsets);
    return csr;
}

QuasiDiscreteSpace QuasiDiscreteSpace::from_edges(
    uint32_t point_count, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
    bool symmetric, std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != point_count)
        throw Error("label list size does not match point count");
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(edges.size() * (symmetric ? 2 : 1));
    for (const auto& [a, b] : edges) {
        if (a >= point_count || b >= point_count)
            throw Error("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) continue;  // self-loops never stored
        pairs.emplace_back(a, b);
        if (symmetric) pairs.emplace_back(b, a);
    }
    QuasiDiscreteSpace s;
    s.n_ = point_count;
    s.fwd_ = build_csr(point_count, pairs, false);
    s.bwd_ = build_csr(point_count, pairs, true);
    s.labels_ = std::move(labels);
    return s;
}

bool QuasiDiscreteSpace::is_symmetric() const {
    if (fwd_.targets.size() != bwd_.targets.size()) return false;
    for (uint32_t x = 0; x < n_; ++x) {
        auto f = post(x), b = pre(x);
        if (!std::equal(f.begin(), f.end(), b.begin(), b.end())) return false;
    }
    return true;
}

ClosureModel::ClosureModel(QuasiDiscreteSpace space, std::map<std::string, PointSet> valuation)
    : space_(std::move(space)), valuation_(std::move(valuation)) {
    for (const auto& [name, set] : valuation_)
        if (set.universe_size() != space_.point_count())
            throw Error("valuation of '" + name + "' does not fit the space");
}

PointSet ClosureModel::proposition(const std::string& name) const {
    auto it = valuation_.find(name);
    if (it != valuation_.end()) return it->second;
    return PointSet(space_.point_count());
}

PointSet closure(const QuasiDiscreteSpace& space, const PointSet& a) {
    check_set(space, a, "closure");
    PointSet r = a;
    a.for_each([&](uint32_t x) {
        for (uint32_t y : space.post(x)) r.insert(y);
    });
    return r;
}

PointSet interior(const QuasiDiscreteSpace& space, const PointSet& a) {
    check_set(space, a, "interior");
    PointSet r(space.point_count());
    a.for_each([&](uint32_t x) {
        for (uint32_t y : space.pre(x))
            if (!a.contains(y)) return;
        r.insert(x);
    });
    return r;
}

PointSet boundary(const QuasiDiscreteSpace& space, const PointSet& a, BoundaryKind kind) {
    check_set(space, a, "boundary");
    switch (kind) {
        case BoundaryKind::full:
            return closure(space, a) - interior(space, a);
        case BoundaryKind::inner:
            return a - interior(space, a);
        case BoundaryKind::outer:
            return closure(space, a) - a;
    }
    throw Error("boundary: bad kind");
}

PointSet adjacent(const QuasiDiscreteSpace& space, uint32_t x, Direction dir) {
    check_point(space, x, "adjacent");
    PointSet r(space.point_count());
    for (uint32_t y : dir == Direction::post ? space.post(x) : space.pre(x)) r.insert(y);
    return r;
}

PointSet minimal_neighbourhood(const QuasiDiscreteSpace& space, uint32_t x) {
    check_point(space, x, "minimal_neighbourhood");
    PointSet r = adjacent(space, x, Direction::pre);
    r.insert(x);
    return r;
}

QuasiDiscreteSpace subspace(const QuasiDiscreteSpace& space, const PointSet& y) {
    check_set(space, y, "subspace");
    std::vector<uint32_t> members = y.to_vector();
    std::vector<uint32_t> to_new(space.point_count(), UINT32_MAX);
    for (uint32_t i = 0; i < members.size(); ++i) to_new[members[i]] = i;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (uint32_t i = 0; i < members.size(); ++i) {
        uint32_t old = members[i];
        labels.push_back(space.has_labels() ? space.label(old) : std::to_string(old));
        for (uint32_t t : space.post(old))
            if (to_new[t] != UINT32_MAX) edges.emplace_back(i, to_new[t]);
    }
    return QuasiDiscreteSpace::from_edges(static_cast<uint32_t>(members.size()), edges, false, std::move(labels));
}

QuasiDiscreteSpace coproduct(const QuasiDiscreteSpace& s1, const QuasiDiscreteSpace& s2) {
    uint32_t n1 = s1.point_count(), n = n1 + s2.point_count();
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(s1.pair_count() + s2.pair_count());
    for (uint32_t x = 0; x < n1; ++x)
        for (uint32_t t : s1.post(x)) edges.emplace_back(x, t);
    for (uint32_t x = 0; x < s2.point_count(); ++x)
        for (uint32_t t : s2.post(x)) edges.emplace_back(n1 + x, n1 + t);
    std::vector<std::string> labels;
    if (s1.has_labels() || s2.has_labels()) {
        labels.reserve(n);
        for (uint32_t x = 0; x < n1; ++x)
            labels.push_back(s1.has_labels() ? s1.label(x) : std::to_string(x));
        for (uint32_t x = 0; x < s2.point_count(); ++x)
            labels.push_back(s2.has_labels() ? s2.label(x) : std::to_string(x));
    }
    return QuasiDiscreteSpace::from_edges(n, edges, false, std::move(labels));
}

bool is_path_connected(const QuasiDiscreteSpace& space, const PointSet& a) {
    check_set(space, a, "is_path_connected");
    if (a.count() <= 1) return true;
    uint32_t start = a.min_member();
    // Strong connectedness of the induced subgraph: forward and backward
    // reachability from one member must each cover A.
    for (Direction dir : {Direction::post, Direction::pre}) {
        PointSet seen(space.point_count());
        seen.insert(start);
        std::deque<uint32_t> queue{start};
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            for (uint32_t y : dir == Direction::post ? space.post(x) : space.pre(x))
                if (a.contains(y) && !seen.contains(y)) {
                    seen.insert(y);
                    queue.push_back(y);
                }
        }
        if (seen.count() != a.count()) return false;
    }
    return true;
}

bool is_separation_connected(const QuasiDiscreteSpace& space, const PointSet& a) {
    check_set(space, a, "is_separation_connected");
    uint32_t k = a.count();
    if (k <= 1) return true;
    if (k <= 20) {
        // Subspace successor masks; C^A(S) = S | succ(S) within A's bits.
        std::vector<uint32_t> members = a.to_vector();
        std::vector<uint32_t> to_local(space.point_count(), UINT32_MAX);
        for (uint32_t i = 0; i < k; ++i) to_local[members[i]] = i;
        std::vector<uint32_t> succ(k, 0);
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t t : space.post(members[i]))
                if (to_local[t] != UINT32_MAX) succ[i] |= uint32_t{1} << to_local[t];
        uint32_t all = (k == 32) ? ~uint32_t{0} : (uint32_t{1} << k) - 1;
        // Member 0 goes to A1; enumerate the rest.
        for (uint32_t a1 = 1; a1 < all; a1 += 2) {
            uint32_t a2 = all & ~a1;
            uint32_t succ1 = 0, succ2 = 0;
            for (uint32_t i = 0; i < k; ++i) {
                if (a1 & (uint32_t{1} << i)) succ1 |= succ[i];
                else succ2 |= succ[i];
            }
            if ((succ1 & a2) == 0 && (succ2 & a1) == 0) return false;  // separated
        }
        return true;
    }
    if (k == space.point_count() && space.is_symmetric()) {
        // Weak connectivity; equals separation connectedness on symmetric spaces.
        PointSet seen(space.point_count());
        seen.insert(0);
        std::deque<uint32_t> queue{0};
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            for (uint32_t y : space.post(x))
                if (!seen.contains(y)) {
                    seen.insert(y);
                    queue.push_back(y);
                }
        }
        return seen.count() == space.point_count();
    }
    throw Error("is_separation_connected: |A| = " + std::to_string(k) +
                " exceeds the exhaustive-search limit of 20");
}

bool is_topological(const QuasiDiscreteSpace& space) {
    // Reflexive closure transitive: for (x,y),(y,z) in R, z = x or (x,z) in R.
    std::vector<char> mark(space.point_count(), 0);
    for (uint32_t x = 0; x < space.point_count(); ++x) {
        for (uint32_t y : space.post(x)) mark[y] = 1;
        bool ok = true;
        for (uint32_t y : space.post(x)) {
            for (uint32_t z : space.post(y))
                if (z != x && !mark[z]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        for (uint32_t y : space.post(x)) mark[y] = 0;
        if (!ok) return false;
    }
    return true;
}

QuasiDiscreteSpace build_grid_4adj(uint32_t width, uint32_t height) {
    if (width == 0 || height == 0) throw Error("build_grid_4adj: zero dimension");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(static_cast<size_t>(width) * height * 2);
    for (uint32_t r = 0; r < height; ++r)
        for (uint32_t c = 0; c < width; ++c) {
            uint32_t p = r * width + c;
            if (c + 1 < width) edges.emplace_back(p, p + 1);
            if (r + 1 < height) edges.emplace_back(p, p + width);
        }
    return QuasiDiscreteSpace::from_edges(width * height, edges, true);
}

QuasiDiscreteSpace build_delta_graph(const std::vector<std::pair<double, double>>& coords, double delta) {
    if (delta < 0) throw Error("build_delta_graph: negative delta");
    uint32_t n = static_cast<uint32_t>(coords.size());
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    double d2 = delta * delta;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            double dx = coords[i].first - coords[j].first;
            double dy = coords[i].second - coords[j].second;
            if (dx * dx + dy * dy <= d2) edges.emplace_back(i, j);
        }
    return QuasiDiscreteSpace::from_edges(n, edges, true);
}

}  // namespace qdcs
