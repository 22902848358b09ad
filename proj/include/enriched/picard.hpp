#pragma once

#include "enriched/graph.hpp"
#include "enriched/linalg.hpp"

namespace enriched {

/// Line bundle datum on a graph: an integer degree per vertex plus a unit
/// gluing scalar per edge, stored for the orientation ends.first -> ends.second.
/// Two data name the same bundle when they differ by unit rescalings at the
/// vertices; canonical_form picks the representative whose spanning-tree
/// scalars are all 1.
struct CombLineBundle {
    MultiGraph graph;
    unsigned q = 0;
    std::vector<int> degree;        // by vertex index
    std::vector<unsigned> scalars;  // by edge index, nonzero mod q

    bool operator==(const CombLineBundle& o) const {
        return graph == o.graph && q == o.q && degree == o.degree && scalars == o.scalars;
    }
};

CombLineBundle make_bundle(MultiGraph g, unsigned q, std::vector<int> degree,
                           std::vector<unsigned> scalars);
CombLineBundle trivial_bundle(const MultiGraph& g, unsigned q);

// Representative with scalar 1 on a fixed breadth-first spanning tree.
CombLineBundle canonical_form(const CombLineBundle& b);

CombLineBundle tensor(const CombLineBundle& a, const CombLineBundle& b);
CombLineBundle dual(const CombLineBundle& b);

// Product of the oriented scalars along a circuit; invariant under vertex
// rescaling.
unsigned circuit_product(const CombLineBundle& b, const Circuit& c);

// Zero multidegree and product 1 along every cycle in the spanning-tree basis
// (loops included).
bool is_trivial(const CombLineBundle& b);

}  // namespace enriched
