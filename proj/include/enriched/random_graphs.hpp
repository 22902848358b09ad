#pragma once

#include <random>

#include "enriched/graph.hpp"

namespace enriched {

// Seeded connected multigraph: random spanning tree plus extra edges, which
// may be loops or parallels. Deterministic in (seed, max_verts, max_edges).
inline MultiGraph random_connected_multigraph(std::mt19937& rng, int max_verts,
                                              int max_edges) {
    int nv = std::uniform_int_distribution<int>(1, max_verts)(rng);
    std::vector<VertexId> verts;
    for (int i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::tuple<EdgeId, VertexId, VertexId>> edges;
    int eid = 0;
    for (int i = 1; i < nv; ++i) {
        int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        edges.emplace_back("e" + std::to_string(eid++), verts[p], verts[i]);
    }
    int me = std::uniform_int_distribution<int>(nv - 1, max_edges)(rng);
    while (static_cast<int>(edges.size()) < me) {
        int a = std::uniform_int_distribution<int>(0, nv - 1)(rng);
        int b = std::uniform_int_distribution<int>(0, nv - 1)(rng);
        edges.emplace_back("e" + std::to_string(eid++), verts[a], verts[b]);
    }
    return MultiGraph(std::move(verts), std::move(edges));
}

}  // namespace enriched
