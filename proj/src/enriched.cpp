#include "enriched/enriched.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace enriched {

namespace {

// (vertex, incident non-loop edge) -> (relative component index, column)
std::map<std::pair<int, int>, std::pair<int, int>> rc_lookup(
    const std::vector<RelativeComponent>& rcs) {
    std::map<std::pair<int, int>, std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(rcs.size()); ++i)
        for (int j = 0; j < static_cast<int>(rcs[i].sep_edges.size()); ++j)
            out[{rcs[i].v, rcs[i].sep_edges[j]}] = {i, j};
    return out;
}

void check_scalar_shape(const std::vector<RelativeComponent>& rcs, unsigned q,
                        const std::vector<FVec>& scalars) {
    if (scalars.size() != rcs.size())
        throw std::invalid_argument("one scalar row required per relative component");
    for (std::size_t i = 0; i < rcs.size(); ++i) {
        if (scalars[i].size() != rcs[i].sep_edges.size())
            throw std::invalid_argument("scalar row length mismatch");
        for (unsigned s : scalars[i])
            if (s % q == 0) throw std::invalid_argument("scalars must be units");
    }
}

}  // namespace

std::vector<int> standard_multidegree(const MultiGraph& g, const RelativeComponent& rc) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<char> inside(g.vertex_count(), 0);
    for (int x : rc.component) inside[x] = 1;
    for (int e : rc.sep_edges) {
        auto [a, b] = g.ends(e);
        deg[a] += inside[a] ? -1 : 1;
        deg[b] += inside[b] ? -1 : 1;
    }
    return deg;
}

bool is_enriched(const MultiGraph& g, unsigned q, const std::vector<FVec>& scalars) {
    Fq f(q);
    auto rcs = relative_components(g);
    check_scalar_shape(rcs, q, scalars);
    auto lookup = rc_lookup(rcs);
    auto value = [&](int v, int e) {
        auto [i, j] = lookup.at({v, e});
        return scalars[i][j] % q;
    };

    std::vector<int> degsum(g.vertex_count(), 0);
    for (const auto& rc : rcs) {
        auto d = standard_multidegree(g, rc);
        for (std::size_t x = 0; x < d.size(); ++x) degsum[x] += d[x];
    }
    for (int d : degsum)
        if (d != 0) throw std::logic_error("standard multidegrees do not cancel");

    for (const Circuit& c : fundamental_cycles(g)) {
        if (c.length() == 1 && g.is_loop(c.edges[0])) continue;
        unsigned acc = 1;
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            int e = c.edges[i];
            int u = c.verts[i];
            int w = c.verts[(i + 1) % c.verts.size()];
            acc = f.mul(acc, f.mul(value(u, e), f.inv(value(w, e))));
        }
        if (acc != 1) return false;
    }
    return true;
}

EnrichedPoint make_enriched_point(const MultiGraph& g, unsigned q,
                                  std::vector<FVec> scalars) {
    Fq f(q);
    if (!is_enriched(g, q, scalars))
        throw std::invalid_argument("scalars violate the matching condition");
    EnrichedPoint p;
    p.graph = g;
    p.q = q;
    p.rcs = relative_components(g);
    for (auto& row : scalars) {
        if (!row.empty()) {
            unsigned s = f.inv(row[0]);
            for (auto& x : row) x = f.mul(x % q, s);
        }
    }
    p.scalars = std::move(scalars);
    return p;
}

namespace {

struct EsShape {
    std::vector<RelativeComponent> rcs;
    std::vector<int> free_edges;              // one slot per free parameter
    std::vector<unsigned long long> weight;   // mixed-radix weights, base q-1
    unsigned long long total = 1;
};

EsShape es_shape(const MultiGraph& g, unsigned q) {
    EsShape sh;
    sh.rcs = relative_components(g);
    for (const auto& block : circuit_partition(g)) {
        if (block.size() < 2) continue;  // bridges and loops carry no parameter
        for (std::size_t i = 1; i < block.size(); ++i) sh.free_edges.push_back(block[i]);
    }
    for (std::size_t i = 0; i < sh.free_edges.size(); ++i) {
        sh.weight.push_back(sh.total);
        sh.total *= (q - 1);
        if (sh.total > 100000000ull)
            throw std::invalid_argument("enumeration too large for this field");
    }
    return sh;
}

EnrichedPoint es_from_code(const MultiGraph& g, unsigned q, const EsShape& sh,
                           unsigned long long code) {
    std::vector<unsigned> F(g.edge_count(), 1);
    for (std::size_t i = 0; i < sh.free_edges.size(); ++i)
        F[sh.free_edges[i]] = 1 + static_cast<unsigned>(code / sh.weight[i] % (q - 1));
    std::vector<FVec> scalars;
    for (const auto& rc : sh.rcs) {
        FVec row;
        for (int e : rc.sep_edges) row.push_back(F[e]);
        scalars.push_back(std::move(row));
    }
    return make_enriched_point(g, q, std::move(scalars));
}

}  // namespace

std::vector<EnrichedPoint> enumerate_es(const MultiGraph& g, unsigned q, unsigned jobs) {
    Fq f(q);
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    EsShape sh = es_shape(g, q);
    if (jobs == 0) jobs = 1;
    std::vector<std::vector<EnrichedPoint>> chunks(jobs);
    auto run = [&](unsigned job) {
        unsigned long long lo = sh.total * job / jobs;
        unsigned long long hi = sh.total * (job + 1) / jobs;
        for (unsigned long long code = lo; code < hi; ++code)
            chunks[job].push_back(es_from_code(g, q, sh, code));
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(run, j);
        for (auto& t : threads) t.join();
    }
    std::vector<EnrichedPoint> out;
    for (auto& c : chunks)
        for (auto& p : c) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EnrichedPoint> es_at_point(const LabeledGraph& lg, const FieldPoint& p,
                                       unsigned q, unsigned jobs) {
    Specialization sp = specialize(lg, p);
    return enumerate_es(sp.target.graph, q, jobs);
}

long long gamma_es_count_at_point(const LabeledGraph& lg,
                                  const std::vector<EdgeId>& chart_edges,
                                  const FieldPoint& p, unsigned q) {
    for (const EdgeId& id : chart_edges)
        if (!p.is_unit(lg.label_of(lg.graph.edge_index(id))))
            throw std::invalid_argument("point lies outside the chart locus");
    Contraction chart = contract_ids(lg.graph, chart_edges);
    Specialization sp = specialize(lg, p);
    // contract in the chart target whatever else the point degenerates
    std::vector<int> rest;
    for (int e : sp.contraction.contracted)
        if (!chart.contracts_edge(e))
            rest.push_back(chart.edge_map[e]);
    Contraction induced = contract(chart.target, rest);
    if (!is_aligned_contraction(induced)) return 0;
    return static_cast<long long>(es_at_point(lg, p, q).size());
}

MainoStructure to_maino(const EnrichedPoint& ep) {
    Fq f(ep.q);
    const MultiGraph& g = ep.graph;
    auto lookup = rc_lookup(ep.rcs);
    MainoStructure m;
    m.graph = g;
    m.q = ep.q;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        std::vector<int> deg(g.vertex_count(), 0);
        std::vector<unsigned> sc(g.edge_count(), 1);
        for (int e : g.incident_edges(v)) {
            if (g.is_loop(e)) continue;
            int x = g.other_end(e, v);
            deg[v] -= 1;
            deg[x] += 1;
            auto [i, j] = lookup.at({v, e});
            unsigned F = ep.scalars[i][j];
            // scalar of the dual of the component-bundle product at v
            sc[e] = (g.ends(e).first == v) ? f.inv(F) : F;
        }
        m.per_vertex.push_back(canonical_form(make_bundle(g, ep.q, deg, sc)));
    }
    return m;
}

EnrichedPoint from_maino(const MainoStructure& m) {
    Fq f(m.q);
    const MultiGraph& g = m.graph;
    int n = static_cast<int>(g.vertex_count());
    if (static_cast<int>(m.per_vertex.size()) != n)
        throw std::invalid_argument("one bundle required per vertex");

    CombLineBundle total = trivial_bundle(g, m.q);
    for (const auto& b : m.per_vertex) {
        if (b.graph != g || b.q != m.q)
            throw std::invalid_argument("bundle on the wrong graph or field");
        total = tensor(total, b);
    }
    if (!is_trivial(total))
        throw std::invalid_argument("vertex bundles do not tensor to the trivial bundle");

    auto rcs = relative_components(g);
    auto lookup = rc_lookup(rcs);
    std::vector<FVec> scalars;
    for (const auto& rc : rcs) scalars.emplace_back(rc.sep_edges.size(), 1);

    for (int v = 0; v < n; ++v) {
        // degree pattern check
        std::vector<int> expect(n, 0);
        for (int e : g.incident_edges(v)) {
            if (g.is_loop(e)) continue;
            expect[v] -= 1;
            expect[g.other_end(e, v)] += 1;
        }
        if (m.per_vertex[v].degree != expect)
            throw std::invalid_argument("bundle violates the standard degree pattern");

        // Trivialize the dual away from v: find vertex units making every
        // scalar on an edge missing v equal to 1.
        CombLineBundle beta = m.per_vertex[v];
        for (auto& s : beta.scalars) s = f.inv(s);
        std::vector<unsigned> t(n, 1);
        std::vector<char> visited(n, 0);
        visited[v] = 1;
        for (int s0 = 0; s0 < n; ++s0) {
            if (visited[s0]) continue;
            visited[s0] = 1;
            std::vector<int> queue{s0};
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int u = queue[i];
                for (int e : g.incident_edges(u)) {
                    if (g.is_loop(e)) continue;
                    int w = g.other_end(e, u);
                    if (w == v || visited[w]) continue;
                    visited[w] = 1;
                    if (w == g.ends(e).second)
                        t[w] = f.mul(beta.scalars[e], t[u]);
                    else
                        t[w] = f.mul(t[u], f.inv(beta.scalars[e]));
                    queue.push_back(w);
                }
            }
        }
        auto rescaled = [&](int e) {
            auto [a, b] = g.ends(e);
            return f.mul(beta.scalars[e], f.mul(t[a], f.inv(t[b])));
        };
        for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
            if (g.is_loop(e)) {
                if (beta.scalars[e] != 1)
                    throw std::invalid_argument("bundle not trivializable away from its vertex");
                continue;
            }
            auto [a, b] = g.ends(e);
            if (a == v || b == v) continue;
            if (rescaled(e) != 1)
                throw std::invalid_argument("bundle not trivializable away from its vertex");
        }
        for (int e : g.incident_edges(v)) {
            if (g.is_loop(e)) continue;
            unsigned s = rescaled(e);
            auto [i, j] = lookup.at({v, e});
            scalars[i][j] = (g.ends(e).first == v) ? s : f.inv(s);
        }
    }
    return make_enriched_point(g, m.q, std::move(scalars));
}

}  // namespace enriched
