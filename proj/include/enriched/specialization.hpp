#pragma once

#include <string>
#include <vector>

#include "enriched/graph.hpp"

namespace enriched {

/// Multigraph whose edges carry opaque labels; distinct edges may share a label.
struct LabeledGraph {
    MultiGraph graph;
    std::vector<std::string> labels;  // by edge index

    std::vector<std::string> label_set() const;  // sorted, unique
    const std::string& label_of(int e) const { return labels.at(e); }
};

LabeledGraph make_labeled_graph(MultiGraph g, std::vector<std::pair<EdgeId, std::string>> labels);

/// A point is described by which labels become units there; the rest vanish.
struct FieldPoint {
    std::vector<std::string> units;  // sorted, unique

    bool is_unit(const std::string& label) const;
};

FieldPoint make_field_point(std::vector<std::string> units);

struct Specialization {
    Contraction contraction;
    LabeledGraph target;  // surviving edges keep their labels
};

// Contract every edge whose label is a unit at p.
Specialization specialize(const LabeledGraph& lg, const FieldPoint& p);

// Every circuit carries a single label.
bool is_one_aligned(const LabeledGraph& lg);

// Per circuit-connected block of the source: either all its vertices merge,
// or none of its edges is contracted.
bool is_aligned_contraction(const Contraction& f);

// Two independent counts that must agree:
//   sum over circuit blocks of (#edges - 1), and
//   #non-loop edges + #vertices - sum_v #components(graph minus v) - 1.
int dimension_N(const MultiGraph& g);

/// Relative components (v, G) of the source with sp(v) outside sp(G), matched
/// with all relative components of the specialization target.
struct RelCompBijection {
    std::vector<RelativeComponent> domain;    // source side
    std::vector<RelativeComponent> codomain;  // target side
    std::vector<int> forward;   // domain idx -> codomain idx
    std::vector<int> backward;  // codomain idx -> domain idx
};

RelCompBijection psi_bijection(const LabeledGraph& lg, const FieldPoint& p);

}  // namespace enriched
