#pragma once

#include "enriched/graph.hpp"
#include "enriched/linalg.hpp"
#include "enriched/picard.hpp"
#include "enriched/specialization.hpp"

namespace enriched {

/// One unit scalar per (relative component, separating edge), modulo a common
/// unit per relative component. Canonical representative: the scalar at the
/// least separating edge of each component is 1. Rows follow the order of
/// relative_components(graph); row i column j belongs to rcs[i].sep_edges[j].
struct EnrichedPoint {
    MultiGraph graph;
    unsigned q = 0;
    std::vector<RelativeComponent> rcs;
    std::vector<FVec> scalars;

    bool operator==(const EnrichedPoint& o) const {
        return graph == o.graph && q == o.q && scalars == o.scalars;
    }
    bool operator<(const EnrichedPoint& o) const { return scalars < o.scalars; }
};

// Degree -#sep at vertices inside the component, +#sep outside.
std::vector<int> standard_multidegree(const MultiGraph& g, const RelativeComponent& rc);

// Matching test: product of F_u(e)/F_v(e) along every cycle in the
// spanning-tree basis is 1 (loops excluded); also verifies that the standard
// multidegrees of all relative components sum to zero.
bool is_enriched(const MultiGraph& g, unsigned q, const std::vector<FVec>& scalars);

// Validates unit scalars, checks is_enriched, normalizes per component.
EnrichedPoint make_enriched_point(const MultiGraph& g, unsigned q,
                                  std::vector<FVec> scalars);

// All enriched structures in canonical form, sorted. Exactly (q-1)^N of them.
std::vector<EnrichedPoint> enumerate_es(const MultiGraph& g, unsigned q,
                                        unsigned jobs = 1);

// Enriched structures on the specialization of lg at p.
std::vector<EnrichedPoint> es_at_point(const LabeledGraph& lg, const FieldPoint& p,
                                       unsigned q, unsigned jobs = 1);

// Count over the chart contracting chart_edges: the full count of es_at_point
// when the induced contraction onto the specialization is aligned, else 0.
// p must lie in the chart locus (every chart edge label a unit at p).
long long gamma_es_count_at_point(const LabeledGraph& lg,
                                  const std::vector<EdgeId>& chart_edges,
                                  const FieldPoint& p, unsigned q);

/// One line bundle datum per vertex; bundle classes are compared through
/// canonical_form. Valid structures have the standard degree pattern, tensor
/// trivial over all vertices, and each class trivializable away from its vertex.
struct MainoStructure {
    MultiGraph graph;
    unsigned q = 0;
    std::vector<CombLineBundle> per_vertex;  // canonical form, by vertex index

    bool operator==(const MainoStructure& o) const {
        return graph == o.graph && q == o.q && per_vertex == o.per_vertex;
    }
};

MainoStructure to_maino(const EnrichedPoint& e);
EnrichedPoint from_maino(const MainoStructure& m);

}  // namespace enriched
