#include "enriched/atlas.hpp"

#include <algorithm>
#include <set>

namespace enriched {

std::vector<Chart> enumerate_charts(const MultiGraph& g) {
    int m = static_cast<int>(g.edge_count());
    if (m > 20) throw std::invalid_argument("too many edges for a chart atlas");
    std::vector<Chart> out;
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) subset.push_back(e);
        Chart c;
        c.contraction = contract(g, subset);
        c.aligned = is_aligned_contraction(c.contraction);
        out.push_back(std::move(c));
    }
    return out;
}

bool chart_locus_contains(const LabeledGraph& lg, const Chart& chart,
                          const FieldPoint& p) {
    if (chart.contraction.source != lg.graph)
        throw std::invalid_argument("chart does not belong to this labeled graph");
    for (int e : chart.contraction.contracted)
        if (!p.is_unit(lg.label_of(e))) return false;
    return true;
}

std::optional<EmptinessCertificate> emptiness_certificate(const Contraction& f,
                                                          int target_vertex) {
    const MultiGraph& g = f.source;
    int n = static_cast<int>(g.vertex_count());
    std::vector<char> in_V(n, 0);
    std::vector<int> V;
    for (int v = 0; v < n; ++v) {
        if (f.vertex_map[v] == target_vertex) {
            in_V[v] = 1;
            V.push_back(v);
        }
    }
    if (V.empty()) throw std::invalid_argument("target vertex out of range");

    // look for a block broken at this vertex: a contracted edge collapsing
    // into V while the block still reaches outside V
    int bad_e = -1, bad_eprime = -1;
    for (const auto& block : circuit_partition(g)) {
        int contracted_here = -1;
        bool leaves_V = false;
        int crossing = -1;
        for (int e : block) {
            auto [a, b] = g.ends(e);
            if (f.contracts_edge(e) && in_V[a] && in_V[b] && !g.is_loop(e))
                contracted_here = e;
            if (in_V[a] != in_V[b]) crossing = e;
            if (!in_V[a] || !in_V[b]) leaves_V = true;
        }
        if (contracted_here >= 0 && leaves_V && crossing >= 0) {
            bad_e = contracted_here;
            bad_eprime = crossing;
            break;
        }
    }
    if (bad_e < 0) return std::nullopt;

    EmptinessCertificate cert;
    cert.target_vertex = target_vertex;
    cert.preimage = V;
    cert.contracted_edge = bad_e;
    cert.crossing_edge = bad_eprime;
    for (const Circuit& c : enumerate_circuits(g)) {
        bool has_e = std::find(c.edges.begin(), c.edges.end(), bad_e) != c.edges.end();
        bool has_ep = std::find(c.edges.begin(), c.edges.end(), bad_eprime) != c.edges.end();
        if (has_e && has_ep) {
            cert.witness = c;
            break;
        }
    }
    if (cert.witness.edges.empty())
        throw std::logic_error("circuit-connected edges share no circuit");

    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
        auto [a, b] = g.ends(e);
        if (in_V[a] != in_V[b]) ++cert.lhs;
    }
    for (int w : V) {
        std::vector<char> keep(n, 1);
        keep[w] = 0;
        for (const auto& comp : components_of_subset(g, keep)) {
            bool meets_V = std::any_of(comp.begin(), comp.end(),
                                       [&](int x) { return in_V[x]; });
            if (meets_V) continue;
            std::vector<char> in_comp(n, 0);
            for (int x : comp) in_comp[x] = 1;
            for (int e : g.incident_edges(w))
                if (!g.is_loop(e) && in_comp[g.other_end(e, w)]) ++cert.rhs;
        }
    }
    if (cert.lhs <= cert.rhs)
        throw std::logic_error("certificate inequality failed");
    return cert;
}

bool in_glueing_locus(const LabeledGraph& lg, const Chart& a, const Chart& b,
                      const FieldPoint& p) {
    if (!chart_locus_contains(lg, a, p) || !chart_locus_contains(lg, b, p))
        throw std::invalid_argument("point lies outside a chart locus");
    int m = static_cast<int>(lg.graph.edge_count());
    std::vector<char> base(m, 0);
    for (int e : a.contraction.contracted) base[e] = 1;
    for (int e : b.contraction.contracted) base[e] = 1;
    std::vector<int> optional_edges;
    for (int e = 0; e < m; ++e)
        if (!base[e] && p.is_unit(lg.label_of(e))) optional_edges.push_back(e);

    auto aligned_refinement = [&](const Chart& c, const Contraction& mid) {
        // contraction of the chart target onto the intermediate graph
        std::vector<int> rest;
        for (int e : mid.contracted)
            if (!c.contraction.contracts_edge(e))
                rest.push_back(c.contraction.edge_map[e]);
        return is_aligned_contraction(contract(c.contraction.target, rest));
    };

    for (unsigned long long mask = 0; mask < (1ull << optional_edges.size()); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < m; ++e)
            if (base[e]) subset.push_back(e);
        for (std::size_t i = 0; i < optional_edges.size(); ++i)
            if ((mask >> i) & 1) subset.push_back(optional_edges[i]);
        Contraction mid = contract(lg.graph, subset);
        if (aligned_refinement(a, mid) && aligned_refinement(b, mid)) return true;
    }
    return false;
}

AtlasReport atlas_report(const LabeledGraph& lg, unsigned q) {
    AtlasReport rep;
    rep.charts = enumerate_charts(lg.graph);
    auto labels = lg.label_set();
    if (labels.size() > 16)
        throw std::invalid_argument("too many labels for an atlas sweep");
    for (unsigned long long mask = 0; mask < (1ull << labels.size()); ++mask) {
        std::vector<std::string> units;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if ((mask >> i) & 1) units.push_back(labels[i]);
        rep.points.push_back(make_field_point(std::move(units)));
    }
    for (const Chart& chart : rep.charts) {
        std::vector<AtlasCell> row;
        std::vector<EdgeId> chart_edges;
        for (int e : chart.contraction.contracted)
            chart_edges.push_back(lg.graph.edge_id(e));
        for (const FieldPoint& p : rep.points) {
            AtlasCell cell;
            cell.in_locus = chart_locus_contains(lg, chart, p);
            if (cell.in_locus) {
                Specialization sp = specialize(lg, p);
                std::vector<int> rest;
                for (int e : sp.contraction.contracted)
                    if (!chart.contraction.contracts_edge(e))
                        rest.push_back(chart.contraction.edge_map[e]);
                Contraction induced = contract(chart.contraction.target, rest);
                cell.aligned_at_point = is_aligned_contraction(induced);
                cell.count = gamma_es_count_at_point(lg, chart_edges, p, q);
                if (!cell.aligned_at_point) {
                    for (int v = 0;
                         v < static_cast<int>(induced.target.vertex_count()); ++v) {
                        if (emptiness_certificate(induced, v)) {
                            cell.has_certificate = true;
                            break;
                        }
                    }
                }
            }
            row.push_back(cell);
        }
        rep.cells.push_back(std::move(row));
    }
    return rep;
}

}  // namespace enriched
