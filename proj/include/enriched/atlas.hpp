#pragma once

#include <optional>

#include "enriched/enriched.hpp"
#include "enriched/graph.hpp"
#include "enriched/specialization.hpp"

namespace enriched {

/// One chart per edge subset of the labeled model graph.
struct Chart {
    Contraction contraction;
    bool aligned = false;
};

std::vector<Chart> enumerate_charts(const MultiGraph& g);

// A point belongs to the chart when every contracted edge's label is a unit.
bool chart_locus_contains(const LabeledGraph& lg, const Chart& chart,
                          const FieldPoint& p);

/// Degree-count witness that the chart carries no structures over the points
/// merging `preimage` into `target_vertex`: lhs strictly exceeds rhs, and the
/// witness circuit shows the contraction breaks its block.
struct EmptinessCertificate {
    int target_vertex = -1;
    std::vector<int> preimage;  // source vertices merging to target_vertex
    long lhs = 0;               // edges leaving the preimage
    long rhs = 0;               // edges into components avoiding the preimage
    Circuit witness;            // contains both edges below
    int contracted_edge = -1;
    int crossing_edge = -1;
};

std::optional<EmptinessCertificate> emptiness_certificate(const Contraction& f,
                                                          int target_vertex);

// Two charts glue over p when some intermediate contraction refines both
// alignedly and still maps onto the specialization at p.
bool in_glueing_locus(const LabeledGraph& lg, const Chart& a, const Chart& b,
                      const FieldPoint& p);

struct AtlasCell {
    bool in_locus = false;
    bool aligned_at_point = false;
    long long count = 0;
    bool has_certificate = false;
};

struct AtlasReport {
    std::vector<Chart> charts;
    std::vector<FieldPoint> points;            // all unit subsets of the labels
    std::vector<std::vector<AtlasCell>> cells;  // [chart][point]
};

AtlasReport atlas_report(const LabeledGraph& lg, unsigned q);

}  // namespace enriched
