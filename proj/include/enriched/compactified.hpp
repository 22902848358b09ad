#pragma once

#include "enriched/enriched.hpp"
#include "enriched/graph.hpp"
#include "enriched/linalg.hpp"
#include "enriched/specialization.hpp"

namespace enriched {

/// One projective point per hemisphere, with homogeneous coordinates indexed
/// by the hemisphere's sorted separating edges. Hemisphere order follows
/// hemispheres(graph).
struct HemisphereData {
    MultiGraph graph;
    unsigned q = 0;
    std::vector<Hemisphere> hems;
    std::vector<FVec> points;  // normalized projective coordinates

    bool operator==(const HemisphereData& o) const {
        return graph == o.graph && q == o.q && points == o.points;
    }
    bool operator<(const HemisphereData& o) const { return points < o.points; }
};

HemisphereData make_hemisphere_data(const MultiGraph& g, unsigned q,
                                    std::vector<FVec> points);

struct CompatibilityEntry {
    std::vector<int> edges;  // the subset A, sorted edge idxs
    Subspace sum;            // sum of hemisphere kernels inside F_q^A
    unsigned codim = 0;
    bool pass = false;
};

struct CompatibilityReport {
    bool pass = false;
    std::vector<CompatibilityEntry> entries;  // one per nonempty edge subset
};

// Full scan: for every nonempty edge subset A, the kernels of the hemispheres
// supported inside A must sum to a proper subspace of F_q^A.
CompatibilityReport is_compatible(const HemisphereData& hd);

// Optimized route checking only the circuit-connected blocks as subsets.
bool is_compatible_per_class(const HemisphereData& hd);

// Every homogeneous coordinate of every hemisphere point is a unit.
bool is_invertible(const HemisphereData& hd);

// Read the enriched structure off the hemispheres that are relative
// components. Requires compatible and invertible data.
EnrichedPoint ces_to_es(const HemisphereData& hd);

// Extend an enriched structure to all hemispheres: match the component
// scalars along each circuit block and evaluate them on separating edges.
HemisphereData es_to_ces(const EnrichedPoint& ep);

// All compatible hemisphere data, invertible or not, sorted.
std::vector<HemisphereData> enumerate_ces(const MultiGraph& g, unsigned q,
                                          unsigned jobs = 1);

std::vector<HemisphereData> ces_at_point(const LabeledGraph& lg, const FieldPoint& p,
                                         unsigned q, unsigned jobs = 1);

}  // namespace enriched
