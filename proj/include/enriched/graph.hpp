#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enriched {

using VertexId = std::string;
using EdgeId = std::string;

/// Finite multigraph with loops and parallel edges. Vertex and edge ids are
/// opaque strings; internally everything is indexed against the sorted id
/// lists. Immutable after construction.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::vector<VertexId> vertices,
               std::vector<std::tuple<EdgeId, VertexId, VertexId>> edges);

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertex_ids() const { return verts_; }
    const std::vector<EdgeId>& edge_ids() const { return edges_; }

    // Endpoints as index pair, first <= second; equal pair means loop.
    const std::pair<int, int>& ends(int e) const { return ends_.at(e); }
    bool is_loop(int e) const { return ends_.at(e).first == ends_.at(e).second; }

    int vertex_index(const VertexId& v) const;  // throws on unknown id
    int edge_index(const EdgeId& e) const;
    const VertexId& vertex_id(int i) const { return verts_.at(i); }
    const EdgeId& edge_id(int i) const { return edges_.at(i); }

    std::vector<int> incident_edges(int v) const;  // loops listed once
    int other_end(int e, int v) const;

    bool operator==(const MultiGraph& o) const;
    bool operator!=(const MultiGraph& o) const { return !(*this == o); }

private:
    std::vector<VertexId> verts_;
    std::vector<EdgeId> edges_;
    std::vector<std::pair<int, int>> ends_;
};

/// A closed walk repeating no edge and no interior vertex. verts[i] --edges[i]-->
/// verts[i+1 mod n]; a loop is a circuit of length 1. Stored canonically
/// (rotation/reflection chosen deterministically).
struct Circuit {
    std::vector<int> verts;
    std::vector<int> edges;

    std::size_t length() const { return edges.size(); }
    bool operator==(const Circuit& o) const { return verts == o.verts && edges == o.edges; }
};

/// Edge-contraction morphism. Edges in `contracted` map to the target vertex
/// their endpoints merge into; all other edges survive with their ids.
struct Contraction {
    MultiGraph source;
    MultiGraph target;
    std::vector<int> vertex_map;  // source vertex idx -> target vertex idx
    std::vector<int> edge_map;    // source edge idx -> target edge idx, -1 if contracted
    std::vector<int> contracted;  // sorted source edge idxs

    bool contracts_edge(int e) const { return edge_map.at(e) < 0; }
    // For a contracted edge, the target vertex it collapses onto.
    int collapsed_to(int e) const { return vertex_map.at(source.ends(e).first); }
};

/// Pair (v, G): v a vertex, G a connected component of the graph minus v.
struct RelativeComponent {
    int v = -1;
    std::vector<int> component;   // sorted vertex idxs
    std::vector<int> sep_edges;   // sorted edge idxs, each from v into component

    bool operator==(const RelativeComponent& o) const {
        return v == o.v && component == o.component && sep_edges == o.sep_edges;
    }
};

/// Connected proper vertex subset with connected complement.
struct Hemisphere {
    std::vector<int> verts;      // sorted
    std::vector<int> sep_edges;  // sorted, edges with exactly one end inside

    bool operator==(const Hemisphere& o) const {
        return verts == o.verts && sep_edges == o.sep_edges;
    }
};

// ---- operations ------------------------------------------------------------

std::vector<std::vector<int>> connected_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Components of the subgraph induced on the vertices with keep[v] != 0.
std::vector<std::vector<int>> components_of_subset(const MultiGraph& g,
                                                   const std::vector<char>& keep);

// All simple cycles, one canonical representative per rotation/reflection
// class; loops appear as length-1 circuits.
std::vector<Circuit> enumerate_circuits(const MultiGraph& g);

// Maximal circuit-connected edge subsets, computed by closing the enumerated
// circuits under pairwise union. Bridges are singleton blocks, each loop is a
// block of its own.
std::vector<std::vector<int>> circuit_partition(const MultiGraph& g);

// Independent route to the same partition: loops split off, the rest
// decomposed into biconnected blocks by a lowlink search.
std::vector<std::vector<int>> circuit_partition_blocks(const MultiGraph& g);

std::vector<RelativeComponent> relative_components(const MultiGraph& g);
std::vector<Hemisphere> hemispheres(const MultiGraph& g);

Contraction contract(const MultiGraph& g, const std::vector<int>& edge_subset);
Contraction contract_ids(const MultiGraph& g, const std::vector<EdgeId>& edge_subset);
Contraction identity_contraction(const MultiGraph& g);
// g must have f.target as source; result contracts the union.
Contraction compose(const Contraction& f, const Contraction& g);

// Spanning-tree cycle basis; loops included as length-1 cycles.
std::vector<Circuit> fundamental_cycles(const MultiGraph& g);

}  // namespace enriched
