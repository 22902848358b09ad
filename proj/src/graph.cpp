#include "enriched/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace enriched {

MultiGraph::MultiGraph(std::vector<VertexId> vertices,
                       std::vector<std::tuple<EdgeId, VertexId, VertexId>> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex id");
    verts_ = std::move(vertices);

    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (std::get<0>(edges[i]) == std::get<0>(edges[i + 1]))
            throw std::invalid_argument("duplicate edge id: " + std::get<0>(edges[i]));
    for (const auto& [id, a, b] : edges) {
        edges_.push_back(id);
        int ia = vertex_index(a);
        int ib = vertex_index(b);
        ends_.emplace_back(std::min(ia, ib), std::max(ia, ib));
    }
}

int MultiGraph::vertex_index(const VertexId& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw std::invalid_argument("unknown vertex id: " + v);
    return static_cast<int>(it - verts_.begin());
}

int MultiGraph::edge_index(const EdgeId& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw std::invalid_argument("unknown edge id: " + e);
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> MultiGraph::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (ends_[e].first == v || ends_[e].second == v) out.push_back(e);
    return out;
}

int MultiGraph::other_end(int e, int v) const {
    const auto& [a, b] = ends_.at(e);
    if (a == v) return b;
    if (b == v) return a;
    throw std::invalid_argument("vertex not an endpoint of edge");
}

bool MultiGraph::operator==(const MultiGraph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_ && ends_ == o.ends_;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> components_of_subset(const MultiGraph& g,
                                                   const std::vector<char>& keep) {
    int n = static_cast<int>(g.vertex_count());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (!keep[s] || comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int e : g.incident_edges(u)) {
                if (g.is_loop(e)) continue;
                int w = g.other_end(e, u);
                if (keep[w] && comp[w] < 0) {
                    comp[w] = comp[u];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const MultiGraph& g) {
    return components_of_subset(g, std::vector<char>(g.vertex_count(), 1));
}

bool is_connected(const MultiGraph& g) {
    return g.vertex_count() >= 1 && connected_components(g).size() == 1;
}

namespace {

Circuit canonical_circuit(Circuit c) {
    std::size_t m = c.length();
    if (m <= 1) return c;
    Circuit rev;
    rev.verts.push_back(c.verts[0]);
    for (std::size_t i = m - 1; i >= 1; --i) rev.verts.push_back(c.verts[i]);
    for (std::size_t i = m; i >= 1; --i) rev.edges.push_back(c.edges[i - 1]);

    auto better = [m](const Circuit& a, const Circuit& b) {
        return std::tie(a.verts, a.edges) < std::tie(b.verts, b.edges);
    };
    Circuit best = c;
    for (const Circuit* base : {&c, &rev}) {
        for (std::size_t r = 0; r < m; ++r) {
            Circuit rot;
            for (std::size_t i = 0; i < m; ++i) {
                rot.verts.push_back(base->verts[(r + i) % m]);
                rot.edges.push_back(base->edges[(r + i) % m]);
            }
            if (better(rot, best)) best = rot;
        }
    }
    return best;
}

struct CircuitSearch {
    const MultiGraph& g;
    std::vector<char> on_path;
    std::vector<char> used_edge;
    std::vector<int> path_verts;
    std::vector<int> path_edges;
    int start = 0;
    std::set<std::vector<int>> seen;  // sorted edge sets
    std::vector<Circuit>& out;

    CircuitSearch(const MultiGraph& g_, std::vector<Circuit>& out_)
        : g(g_),
          on_path(g_.vertex_count(), 0),
          used_edge(g_.edge_count(), 0),
          out(out_) {}

    void record() {
        std::vector<int> key = path_edges;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        Circuit c;
        c.verts = path_verts;
        c.edges = path_edges;
        out.push_back(canonical_circuit(std::move(c)));
    }

    void dfs(int u) {
        for (int e : g.incident_edges(u)) {
            if (g.is_loop(e) || used_edge[e]) continue;
            int w = g.other_end(e, u);
            if (w == start && path_edges.size() >= 1) {
                path_edges.push_back(e);
                record();
                path_edges.pop_back();
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                used_edge[e] = 1;
                path_verts.push_back(w);
                path_edges.push_back(e);
                dfs(w);
                path_verts.pop_back();
                path_edges.pop_back();
                used_edge[e] = 0;
                on_path[w] = 0;
            }
        }
    }
};

}  // namespace

std::vector<Circuit> enumerate_circuits(const MultiGraph& g) {
    std::vector<Circuit> out;
    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e)
        if (g.is_loop(e)) out.push_back(Circuit{{g.ends(e).first}, {e}});
    CircuitSearch search(g, out);
    for (int s = 0; s < static_cast<int>(g.vertex_count()); ++s) {
        search.start = s;
        search.on_path.assign(g.vertex_count(), 0);
        search.on_path[s] = 1;
        search.path_verts = {s};
        search.path_edges.clear();
        search.dfs(s);
    }
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
        return std::tie(a.edges, a.verts) < std::tie(b.edges, b.verts);
    });
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> by_root;
    for (int e = 0; e < n; ++e) by_root[uf.find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

std::vector<std::vector<int>> circuit_partition(const MultiGraph& g) {
    int m = static_cast<int>(g.edge_count());
    UnionFind uf(m);
    for (const Circuit& c : enumerate_circuits(g))
        for (std::size_t i = 1; i < c.edges.size(); ++i) uf.unite(c.edges[0], c.edges[i]);
    return classes_of(uf, m);
}

namespace {

struct BlockSearch {
    const MultiGraph& g;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    int timer = 0;
    UnionFind uf;

    explicit BlockSearch(const MultiGraph& g_)
        : g(g_), disc(g_.vertex_count(), 0), low(g_.vertex_count(), 0),
          uf(g_.edge_count()) {}

    void dfs(int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        for (int e : g.incident_edges(u)) {
            if (g.is_loop(e) || e == parent_edge) continue;
            int w = g.other_end(e, u);
            if (!disc[w]) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    // pop one block
                    int first = -1;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        if (first < 0)
                            first = top;
                        else
                            uf.unite(first, top);
                        if (top == e) break;
                    }
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.push_back(e);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> circuit_partition_blocks(const MultiGraph& g) {
    BlockSearch search(g);
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
        if (!search.disc[v]) search.dfs(v, -1);
    return classes_of(search.uf, static_cast<int>(g.edge_count()));
}

std::vector<RelativeComponent> relative_components(const MultiGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    std::vector<RelativeComponent> out;
    int n = static_cast<int>(g.vertex_count());
    for (int v = 0; v < n; ++v) {
        std::vector<char> keep(n, 1);
        keep[v] = 0;
        for (auto& comp : components_of_subset(g, keep)) {
            RelativeComponent rc;
            rc.v = v;
            rc.component = comp;
            std::vector<char> in_comp(n, 0);
            for (int x : comp) in_comp[x] = 1;
            for (int e : g.incident_edges(v))
                if (!g.is_loop(e) && in_comp[g.other_end(e, v)]) rc.sep_edges.push_back(e);
            std::sort(rc.sep_edges.begin(), rc.sep_edges.end());
            out.push_back(std::move(rc));
        }
    }
    return out;
}

std::vector<Hemisphere> hemispheres(const MultiGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    int n = static_cast<int>(g.vertex_count());
    if (n > 24) throw std::invalid_argument("too many vertices for hemisphere scan");
    std::vector<Hemisphere> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<char> inside(n, 0), outside(n, 0);
        for (int v = 0; v < n; ++v)
            ((mask >> v) & 1u ? inside : outside)[v] = 1;
        if (components_of_subset(g, inside).size() != 1) continue;
        if (components_of_subset(g, outside).size() != 1) continue;
        Hemisphere h;
        for (int v = 0; v < n; ++v)
            if (inside[v]) h.verts.push_back(v);
        for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
            auto [a, b] = g.ends(e);
            if (inside[a] != inside[b]) h.sep_edges.push_back(e);
        }
        out.push_back(std::move(h));
    }
    return out;
}

Contraction contract(const MultiGraph& g, const std::vector<int>& edge_subset) {
    int n = static_cast<int>(g.vertex_count());
    int m = static_cast<int>(g.edge_count());
    std::vector<char> in_subset(m, 0);
    for (int e : edge_subset) {
        if (e < 0 || e >= m) throw std::invalid_argument("edge index out of range");
        in_subset[e] = 1;
    }
    UnionFind uf(n);
    for (int e = 0; e < m; ++e)
        if (in_subset[e]) uf.unite(g.ends(e).first, g.ends(e).second);

    // Each merged class is named after its lexicographically least member.
    std::vector<int> rep(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (rep[r] < 0 || g.vertex_id(v) < g.vertex_id(rep[r])) rep[r] = v;
    }
    std::vector<VertexId> tverts;
    for (int v = 0; v < n; ++v)
        if (rep[uf.find(v)] == v) tverts.push_back(g.vertex_id(v));

    std::vector<std::tuple<EdgeId, VertexId, VertexId>> tedges;
    for (int e = 0; e < m; ++e)
        if (!in_subset[e])
            tedges.emplace_back(g.edge_id(e), g.vertex_id(rep[uf.find(g.ends(e).first)]),
                                g.vertex_id(rep[uf.find(g.ends(e).second)]));

    Contraction c;
    c.source = g;
    c.target = MultiGraph(std::move(tverts), std::move(tedges));
    c.vertex_map.resize(n);
    for (int v = 0; v < n; ++v)
        c.vertex_map[v] = c.target.vertex_index(g.vertex_id(rep[uf.find(v)]));
    c.edge_map.resize(m);
    for (int e = 0; e < m; ++e) {
        if (in_subset[e]) {
            c.edge_map[e] = -1;
            c.contracted.push_back(e);
        } else {
            c.edge_map[e] = c.target.edge_index(g.edge_id(e));
        }
    }
    return c;
}

Contraction contract_ids(const MultiGraph& g, const std::vector<EdgeId>& edge_subset) {
    std::vector<int> idxs;
    for (const EdgeId& id : edge_subset) idxs.push_back(g.edge_index(id));
    return contract(g, idxs);
}

Contraction identity_contraction(const MultiGraph& g) { return contract(g, {}); }

Contraction compose(const Contraction& f, const Contraction& g) {
    if (f.target != g.source)
        throw std::invalid_argument("contractions not composable");
    std::vector<int> all = f.contracted;
    for (int e : g.contracted)
        all.push_back(f.source.edge_index(g.source.edge_id(e)));
    Contraction c = contract(f.source, all);
    if (c.target != g.target)
        throw std::logic_error("composition target mismatch");
    return c;
}

std::vector<Circuit> fundamental_cycles(const MultiGraph& g) {
    int n = static_cast<int>(g.vertex_count());
    int m = static_cast<int>(g.edge_count());
    std::vector<int> parent_edge(n, -1), parent(n, -1), depth(n, 0);
    std::vector<char> visited(n, 0), in_tree(m, 0);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int u = queue[i];
            for (int e : g.incident_edges(u)) {
                if (g.is_loop(e)) continue;
                int w = g.other_end(e, u);
                if (!visited[w]) {
                    visited[w] = 1;
                    parent[w] = u;
                    parent_edge[w] = e;
                    depth[w] = depth[u] + 1;
                    in_tree[e] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<Circuit> out;
    for (int e = 0; e < m; ++e) {
        if (g.is_loop(e)) {
            out.push_back(Circuit{{g.ends(e).first}, {e}});
            continue;
        }
        if (in_tree[e]) continue;
        auto [u, v] = g.ends(e);
        // ascend from both endpoints to their lowest common tree ancestor
        std::vector<std::pair<int, int>> vup, uup;  // (vertex, edge up to parent)
        int a = v, b = u;
        while (depth[a] > depth[b]) {
            vup.emplace_back(a, parent_edge[a]);
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            uup.emplace_back(b, parent_edge[b]);
            b = parent[b];
        }
        while (a != b) {
            vup.emplace_back(a, parent_edge[a]);
            a = parent[a];
            uup.emplace_back(b, parent_edge[b]);
            b = parent[b];
        }
        int lca = a;
        // circuit: u --e--> v --tree--> lca --tree--> u
        Circuit c;
        c.verts.push_back(u);
        c.edges.push_back(e);
        for (auto [x, pe] : vup) {
            c.verts.push_back(x);
            c.edges.push_back(pe);
        }
        if (!uup.empty()) {
            c.verts.push_back(lca);
            for (std::size_t i = uup.size(); i >= 2; --i) {
                c.edges.push_back(uup[i - 1].second);
                c.verts.push_back(uup[i - 1].first);
            }
            c.edges.push_back(uup[0].second);
        }
        if (c.verts.size() != c.edges.size())
            throw std::logic_error("malformed fundamental cycle");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace enriched
