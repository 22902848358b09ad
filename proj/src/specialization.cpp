#include "enriched/specialization.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace enriched {

std::vector<std::string> LabeledGraph::label_set() const {
    std::vector<std::string> out = labels;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LabeledGraph make_labeled_graph(MultiGraph g,
                                std::vector<std::pair<EdgeId, std::string>> labels) {
    if (labels.size() != g.edge_count())
        throw std::invalid_argument("label count does not match edge count");
    LabeledGraph lg;
    lg.labels.resize(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    for (auto& [id, label] : labels) {
        int e = g.edge_index(id);
        if (seen[e]) throw std::invalid_argument("edge labeled twice: " + id);
        seen[e] = 1;
        lg.labels[e] = std::move(label);
    }
    lg.graph = std::move(g);
    return lg;
}

bool FieldPoint::is_unit(const std::string& label) const {
    return std::binary_search(units.begin(), units.end(), label);
}

FieldPoint make_field_point(std::vector<std::string> units) {
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());
    return FieldPoint{std::move(units)};
}

Specialization specialize(const LabeledGraph& lg, const FieldPoint& p) {
    auto labels = lg.label_set();
    for (const auto& u : p.units)
        if (!std::binary_search(labels.begin(), labels.end(), u))
            throw std::invalid_argument("point refers to unknown label: " + u);
    std::vector<int> contracted;
    for (int e = 0; e < static_cast<int>(lg.graph.edge_count()); ++e)
        if (p.is_unit(lg.labels[e])) contracted.push_back(e);
    Specialization sp;
    sp.contraction = contract(lg.graph, contracted);
    sp.target.graph = sp.contraction.target;
    sp.target.labels.resize(sp.target.graph.edge_count());
    for (int e = 0; e < static_cast<int>(lg.graph.edge_count()); ++e)
        if (!sp.contraction.contracts_edge(e))
            sp.target.labels[sp.contraction.edge_map[e]] = lg.labels[e];
    return sp;
}

bool is_one_aligned(const LabeledGraph& lg) {
    for (const Circuit& c : enumerate_circuits(lg.graph)) {
        for (std::size_t i = 1; i < c.edges.size(); ++i)
            if (lg.labels[c.edges[i]] != lg.labels[c.edges[0]]) return false;
    }
    return true;
}

bool is_aligned_contraction(const Contraction& f) {
    for (const auto& block : circuit_partition(f.source)) {
        std::set<int> block_verts, images;
        bool any_contracted = false;
        for (int e : block) {
            block_verts.insert(f.source.ends(e).first);
            block_verts.insert(f.source.ends(e).second);
            if (f.contracts_edge(e)) any_contracted = true;
        }
        for (int v : block_verts) images.insert(f.vertex_map[v]);
        if (images.size() > 1 && any_contracted) return false;
    }
    return true;
}

int dimension_N(const MultiGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    int by_blocks = 0;
    for (const auto& block : circuit_partition(g))
        by_blocks += static_cast<int>(block.size()) - 1;

    int n = static_cast<int>(g.vertex_count());
    int nonloop = 0;
    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e)
        if (!g.is_loop(e)) ++nonloop;
    int comp_sum = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<char> keep(n, 1);
        keep[v] = 0;
        comp_sum += static_cast<int>(components_of_subset(g, keep).size());
    }
    int by_counts = nonloop + n - comp_sum - 1;

    if (by_blocks != by_counts)
        throw std::logic_error("dimension count mismatch between the two formulas");
    return by_blocks;
}

RelCompBijection psi_bijection(const LabeledGraph& lg, const FieldPoint& p) {
    if (!is_one_aligned(lg))
        throw std::invalid_argument("source labeling is not 1-aligned");
    Specialization sp = specialize(lg, p);
    const Contraction& f = sp.contraction;

    RelCompBijection b;
    b.codomain = relative_components(f.target);
    for (const RelativeComponent& rc : relative_components(f.source)) {
        int sv = f.vertex_map[rc.v];
        std::set<int> image;
        for (int x : rc.component) image.insert(f.vertex_map[x]);
        if (image.count(sv)) continue;
        b.domain.push_back(rc);
    }
    b.forward.assign(b.domain.size(), -1);
    b.backward.assign(b.codomain.size(), -1);
    for (std::size_t i = 0; i < b.domain.size(); ++i) {
        const RelativeComponent& rc = b.domain[i];
        int sv = f.vertex_map[rc.v];
        std::set<int> image;
        for (int x : rc.component) image.insert(f.vertex_map[x]);
        std::vector<int> image_sorted(image.begin(), image.end());
        for (std::size_t j = 0; j < b.codomain.size(); ++j) {
            if (b.codomain[j].v == sv && b.codomain[j].component == image_sorted) {
                if (b.forward[i] >= 0)
                    throw std::logic_error("ambiguous image relative component");
                b.forward[i] = static_cast<int>(j);
            }
        }
        if (b.forward[i] < 0)
            throw std::logic_error("image is not a relative component of the target");
        if (b.backward[b.forward[i]] >= 0)
            throw std::logic_error("relative component map is not injective");
        b.backward[b.forward[i]] = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < b.codomain.size(); ++j)
        if (b.backward[j] < 0)
            throw std::logic_error("relative component map is not surjective");
    return b;
}

}  // namespace enriched
