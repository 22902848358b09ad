#include "enriched/picard.hpp"

#include <algorithm>

namespace enriched {

CombLineBundle make_bundle(MultiGraph g, unsigned q, std::vector<int> degree,
                           std::vector<unsigned> scalars) {
    Fq f(q);
    if (degree.size() != g.vertex_count())
        throw std::invalid_argument("degree vector has wrong length");
    if (scalars.size() != g.edge_count())
        throw std::invalid_argument("scalar vector has wrong length");
    for (auto& s : scalars) {
        s %= q;
        if (s == 0) throw std::invalid_argument("gluing scalars must be units");
    }
    return CombLineBundle{std::move(g), q, std::move(degree), std::move(scalars)};
}

CombLineBundle trivial_bundle(const MultiGraph& g, unsigned q) {
    return make_bundle(g, q, std::vector<int>(g.vertex_count(), 0),
                       std::vector<unsigned>(g.edge_count(), 1));
}

CombLineBundle canonical_form(const CombLineBundle& b) {
    Fq f(b.q);
    int n = static_cast<int>(b.graph.vertex_count());
    std::vector<unsigned> t(n, 1);
    std::vector<char> visited(n, 0);
    std::vector<char> in_tree(b.graph.edge_count(), 0);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int u = queue[i];
            for (int e : b.graph.incident_edges(u)) {
                if (b.graph.is_loop(e)) continue;
                int w = b.graph.other_end(e, u);
                if (visited[w]) continue;
                visited[w] = 1;
                in_tree[e] = 1;
                // choose t[w] so the rescaled tree scalar becomes 1
                if (w == b.graph.ends(e).second)
                    t[w] = f.mul(b.scalars[e], t[u]);
                else
                    t[w] = f.mul(t[u], f.inv(b.scalars[e]));
                queue.push_back(w);
            }
        }
    }
    CombLineBundle out = b;
    for (int e = 0; e < static_cast<int>(b.graph.edge_count()); ++e) {
        if (b.graph.is_loop(e)) continue;
        auto [a, c] = b.graph.ends(e);
        out.scalars[e] = f.mul(b.scalars[e], f.mul(t[a], f.inv(t[c])));
        if (in_tree[e] && out.scalars[e] != 1)
            throw std::logic_error("spanning tree normalization failed");
    }
    return out;
}

CombLineBundle tensor(const CombLineBundle& a, const CombLineBundle& b) {
    if (a.graph != b.graph || a.q != b.q)
        throw std::invalid_argument("bundles live on different graphs or fields");
    Fq f(a.q);
    CombLineBundle out = a;
    for (std::size_t v = 0; v < a.degree.size(); ++v) out.degree[v] += b.degree[v];
    for (std::size_t e = 0; e < a.scalars.size(); ++e)
        out.scalars[e] = f.mul(a.scalars[e], b.scalars[e]);
    return canonical_form(out);
}

CombLineBundle dual(const CombLineBundle& b) {
    Fq f(b.q);
    CombLineBundle out = b;
    for (auto& d : out.degree) d = -d;
    for (auto& s : out.scalars) s = f.inv(s);
    return canonical_form(out);
}

unsigned circuit_product(const CombLineBundle& b, const Circuit& c) {
    Fq f(b.q);
    unsigned acc = 1;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        int e = c.edges[i];
        if (b.graph.is_loop(e)) {
            acc = f.mul(acc, b.scalars[e]);
            continue;
        }
        int from = c.verts[i];
        acc = f.mul(acc, from == b.graph.ends(e).first ? b.scalars[e]
                                                       : f.inv(b.scalars[e]));
    }
    return acc;
}

bool is_trivial(const CombLineBundle& b) {
    for (int d : b.degree)
        if (d != 0) return false;
    for (const Circuit& c : fundamental_cycles(b.graph))
        if (circuit_product(b, c) != 1) return false;
    return true;
}

}  // namespace enriched
