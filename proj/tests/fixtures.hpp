#pragma once

// Canonical corpus shared by the unit and acceptance suites, plus seeded
// random-graph helpers for property tests.

#include <random>
#include <vector>

#include "liardom/embedding.hpp"
#include "liardom/graph.hpp"
#include "liardom/reduction.hpp"

namespace fixtures {

using namespace liardom;

// K2 on a single straight step: v0 (0,0), v1 (40,0)
inline SimpleGraph k2() { return SimpleGraph(2, {{0, 1}}); }

inline GridEmbedding k2_embedding() {
    GridEmbedding emb;
    emb.vertex_pos = {{0, 0}, {40, 0}};
    emb.edges = {{0, 1, {{0, 0}, {40, 0}}}};
    return emb;
}

// P3 with the corner at v1: v0 (0,0), v1 (40,0), v2 (40,40)
inline SimpleGraph p3() { return SimpleGraph(3, {{0, 1}, {1, 2}}); }

inline GridEmbedding p3_embedding() {
    GridEmbedding emb;
    emb.vertex_pos = {{0, 0}, {40, 0}, {40, 40}};
    emb.edges = {{0, 1, {{0, 0}, {40, 0}}}, {1, 2, {{40, 0}, {40, 40}}}};
    return emb;
}

// K1,3 star: center v0 at the origin, leaves one step out
inline SimpleGraph star3() { return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline GridEmbedding star3_embedding() {
    GridEmbedding emb;
    emb.vertex_pos = {{0, 0}, {40, 0}, {-40, 0}, {0, 40}};
    emb.edges = {{0, 1, {{0, 0}, {40, 0}}},
                 {0, 2, {{0, 0}, {-40, 0}}},
                 {0, 3, {{0, 0}, {0, 40}}}};
    return emb;
}

inline Reduction reduce_k2() { return reduce(k2(), k2_embedding()); }
inline Reduction reduce_p3() { return reduce(p3(), p3_embedding()); }
inline Reduction reduce_star3() { return reduce(star3(), star3_embedding()); }

// seeded Erdős–Rényi-style graph; edge probability in [0.15, 0.65)
inline SimpleGraph random_graph(std::mt19937_64& rng, int max_n) {
    const int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_n));
    const uint64_t threshold = 150 + rng() % 500;  // per mille
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int32_t u = 0; u < n; ++u)
        for (int32_t v = u + 1; v < n; ++v)
            if (rng() % 1000 < threshold) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

// random subset of the vertices
inline VertexSet random_subset(std::mt19937_64& rng, int n) {
    std::vector<int32_t> ids;
    for (int32_t v = 0; v < n; ++v)
        if (rng() % 2) ids.push_back(v);
    return VertexSet::of(std::move(ids));
}

} // namespace fixtures
