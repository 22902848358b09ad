#pragma once

#include <map>
#include <set>
#include <vector>

#include "enriched/compactified.hpp"
#include "enriched/enriched.hpp"
#include "enriched/graph.hpp"
#include "enriched/linalg.hpp"
#include "enriched/picard.hpp"
#include "enriched/specialization.hpp"

namespace testsupport {

using namespace enriched;

inline MultiGraph two_gon() {
    return MultiGraph({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}});
}

inline MultiGraph triangle() {
    return MultiGraph({"u", "v", "w"},
                      {{"a", "u", "v"}, {"b", "v", "w"}, {"c", "u", "w"}});
}

inline LabeledGraph identity_labeled(const MultiGraph& g) {
    std::vector<std::pair<EdgeId, std::string>> labels;
    for (const EdgeId& id : g.edge_ids()) labels.emplace_back(id, id);
    return make_labeled_graph(g, std::move(labels));
}

// ---- brute-force enriched-structure oracle --------------------------------
// Every scalar tuple, every enumerated circuit checked directly (no cycle
// basis), quotient by the per-component scaling taken explicitly.

inline std::set<std::vector<FVec>> brute_force_es(const MultiGraph& g, unsigned q) {
    Fq f(q);
    auto rcs = relative_components(g);
    std::map<std::pair<int, int>, std::pair<int, int>> lookup;
    std::vector<std::pair<int, int>> slots;  // (rc, column)
    for (int i = 0; i < static_cast<int>(rcs.size()); ++i)
        for (int j = 0; j < static_cast<int>(rcs[i].sep_edges.size()); ++j) {
            lookup[{rcs[i].v, rcs[i].sep_edges[j]}] = {i, j};
            slots.emplace_back(i, j);
        }

    auto circuits = enumerate_circuits(g);
    std::set<std::vector<FVec>> out;
    unsigned long long total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        total *= (q - 1);
        if (total > 400000000ull) throw std::runtime_error("oracle too large");
    }
    std::vector<FVec> scalars;
    for (const auto& rc : rcs) scalars.emplace_back(rc.sep_edges.size(), 1);
    for (unsigned long long code = 0; code < total; ++code) {
        unsigned long long c = code;
        for (const auto& [i, j] : slots) {
            scalars[i][j] = 1 + static_cast<unsigned>(c % (q - 1));
            c /= (q - 1);
        }
        bool good = true;
        for (const Circuit& circ : circuits) {
            if (circ.length() == 1 && g.is_loop(circ.edges[0])) continue;
            unsigned acc = 1;
            for (std::size_t i = 0; i < circ.edges.size(); ++i) {
                int e = circ.edges[i];
                int u = circ.verts[i];
                int w = circ.verts[(i + 1) % circ.verts.size()];
                auto [iu, ju] = lookup.at({u, e});
                auto [iw, jw] = lookup.at({w, e});
                acc = f.mul(acc, f.mul(scalars[iu][ju], f.inv(scalars[iw][jw])));
            }
            if (acc != 1) {
                good = false;
                break;
            }
        }
        if (!good) continue;
        std::vector<FVec> canon = scalars;
        for (auto& row : canon) {
            if (row.empty()) continue;
            unsigned s = f.inv(row[0]);
            for (auto& x : row) x = f.mul(x, s);
        }
        out.insert(std::move(canon));
    }
    return out;
}

inline std::set<std::vector<FVec>> scalars_of(const std::vector<EnrichedPoint>& pts) {
    std::set<std::vector<FVec>> out;
    for (const auto& p : pts) out.insert(p.scalars);
    return out;
}

// ---- brute-force chart-structure count ------------------------------------
// Chart structures at a point, modeled directly: each surviving relative
// component of the chart graph contributes a line bundle on the degenerate
// graph (pushed standard multidegree plus its separating-edge scalars), all
// trivial component data dropped, and the tensor of the lot must be trivial.

inline long long brute_force_gamma_count(const MultiGraph& gM,
                                         const std::vector<int>& chart_edges,
                                         const std::vector<int>& unit_edges,
                                         unsigned q) {
    Fq f(q);
    for (int e : chart_edges) {
        bool unit = false;
        for (int u : unit_edges) unit |= (u == e);
        if (!unit) throw std::invalid_argument("point outside chart locus");
    }
    Contraction sp = contract(gM, unit_edges);
    const MultiGraph& gp = sp.target;

    // One quotient per relative component of the model graph; components with
    // a contracted separating edge carry the trivial quotient and drop out.
    struct Slot {
        std::vector<int> sep;          // surviving edges in the model graph
        std::vector<int> degree;       // pushed multidegree on the target
        int v = -1;
    };
    std::vector<Slot> slots;
    for (const auto& rc : relative_components(gM)) {
        bool trivial = false;
        for (int e : rc.sep_edges)
            if (sp.contracts_edge(e)) trivial = true;
        if (trivial) continue;
        Slot s;
        s.sep = rc.sep_edges;
        s.v = rc.v;
        auto deg = standard_multidegree(gM, rc);
        s.degree.assign(gp.vertex_count(), 0);
        for (std::size_t x = 0; x < deg.size(); ++x)
            s.degree[sp.vertex_map[x]] += deg[x];
        slots.push_back(std::move(s));
    }

    // free parameters: all separating-edge scalars but the first of each slot
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i)
        for (int j = 1; j < static_cast<int>(slots[i].sep.size()); ++j)
            free_slots.emplace_back(i, j);
    unsigned long long total = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
        total *= (q - 1);
        if (total > 400000000ull) throw std::runtime_error("oracle too large");
    }

    long long count = 0;
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<FVec> values;
        for (const auto& s : slots) values.emplace_back(s.sep.size(), 1);
        unsigned long long c = code;
        for (const auto& [i, j] : free_slots) {
            values[i][j] = 1 + static_cast<unsigned>(c % (q - 1));
            c /= (q - 1);
        }
        CombLineBundle total_bundle = trivial_bundle(gp, q);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            std::vector<unsigned> sc(gp.edge_count(), 1);
            for (std::size_t j = 0; j < slots[i].sep.size(); ++j) {
                int e = slots[i].sep[j];
                int ep = sp.edge_map[e];
                int vimg = sp.vertex_map[slots[i].v];
                sc[ep] = (gp.ends(ep).first == vimg) ? values[i][j]
                                                     : f.inv(values[i][j]);
            }
            total_bundle =
                tensor(total_bundle, make_bundle(gp, q, slots[i].degree, sc));
        }
        if (is_trivial(total_bundle)) ++count;
    }
    return count;
}

// ---- brute-force hemisphere-data scan (tiny graphs only) ------------------

inline std::vector<HemisphereData> brute_force_ces(const MultiGraph& g, unsigned q) {
    Fq f(q);
    auto hems = hemispheres(g);
    std::vector<std::vector<FVec>> cands;
    unsigned long long total = 1;
    for (const auto& h : hems) {
        cands.push_back(enumerate_proj(f, static_cast<unsigned>(h.sep_edges.size())));
        total *= cands.back().size();
        if (total > 40000000ull) throw std::runtime_error("oracle too large");
    }
    std::vector<HemisphereData> out;
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<FVec> points;
        unsigned long long c = code;
        for (const auto& list : cands) {
            points.push_back(list[c % list.size()]);
            c /= list.size();
        }
        HemisphereData hd = make_hemisphere_data(g, q, std::move(points));
        if (is_compatible(hd).pass) out.push_back(std::move(hd));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testsupport
