#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qdcs/model_io.hpp"
#include "qdcs/point_set.hpp"
#include "qdcs/space.hpp"

namespace qdcs::testing {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(QDCS_FIXTURE_DIR) / name;
}

inline PointSet set_of(uint32_t n, std::initializer_list<uint32_t> members) {
    PointSet s(n);
    for (uint32_t p : members) s.insert(p);
    return s;
}

inline ClosureModel paper10() { return load_graph_model(fixture("paper_graph_10.graph")); }

// Directed pair (a,b), a != b, kept with probability `density`; symmetric
// spaces get the reverse pair too.
inline QuasiDiscreteSpace random_space(std::mt19937& rng, uint32_t n, double density,
                                       bool symmetric) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            if (a != b && coin(rng)) edges.push_back({a, b});
    return QuasiDiscreteSpace::from_edges(n, edges, symmetric);
}

inline PointSet random_set(std::mt19937& rng, uint32_t n, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    PointSet s(n);
    for (uint32_t p = 0; p < n; ++p)
        if (coin(rng)) s.insert(p);
    return s;
}

inline ClosureModel random_model(std::mt19937& rng, uint32_t n, double density,
                                 const std::vector<std::string>& atoms, bool symmetric) {
    std::map<std::string, PointSet> valuation;
    for (const auto& a : atoms) valuation[a] = random_set(rng, n);
    return ClosureModel(random_space(rng, n, density, symmetric), std::move(valuation));
}

}  // namespace qdcs::testing
