#include "enriched/compactified.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace enriched {

namespace {

// Index of the circuit block containing every separating edge of the
// hemisphere. That block is unique; anything else is a structural error.
int block_of_sep(const std::vector<std::vector<int>>& blocks,
                 const std::vector<int>& sep_edges) {
    if (sep_edges.empty()) throw std::logic_error("hemisphere without separating edges");
    int found = -1;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        for (int e : sep_edges) {
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), e)) {
                if (found >= 0 && found != b)
                    throw std::logic_error("separating edges span several circuit blocks");
                found = b;
            }
        }
    }
    return found;
}

Subspace kernel_sum(const Fq& f, const std::vector<int>& A,
                    const std::vector<const Hemisphere*>& hems,
                    const std::vector<const FVec*>& pts) {
    std::vector<Subspace> parts;
    std::vector<std::vector<unsigned>> inclusions;
    for (std::size_t i = 0; i < hems.size(); ++i) {
        parts.push_back(hyperplane_kernel(f, *pts[i]));
        std::vector<unsigned> inc;
        for (int e : hems[i]->sep_edges) {
            auto it = std::lower_bound(A.begin(), A.end(), e);
            inc.push_back(static_cast<unsigned>(it - A.begin()));
        }
        inclusions.push_back(std::move(inc));
    }
    return subspace_sum(f, static_cast<unsigned>(A.size()), parts, inclusions);
}

bool sep_inside(const std::vector<int>& sep, const std::vector<int>& A) {
    return std::all_of(sep.begin(), sep.end(), [&](int e) {
        return std::binary_search(A.begin(), A.end(), e);
    });
}

}  // namespace

HemisphereData make_hemisphere_data(const MultiGraph& g, unsigned q,
                                    std::vector<FVec> points) {
    Fq f(q);
    HemisphereData hd;
    hd.graph = g;
    hd.q = q;
    hd.hems = hemispheres(g);
    if (points.size() != hd.hems.size())
        throw std::invalid_argument("one projective point required per hemisphere");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != hd.hems[i].sep_edges.size())
            throw std::invalid_argument("projective point has wrong dimension");
        points[i] = normalize_proj(f, std::move(points[i]));
    }
    hd.points = std::move(points);
    return hd;
}

CompatibilityReport is_compatible(const HemisphereData& hd) {
    Fq f(hd.q);
    int m = static_cast<int>(hd.graph.edge_count());
    if (m > 20) throw std::invalid_argument("too many edges for the full subset scan");
    CompatibilityReport rep;
    rep.pass = true;
    for (unsigned long long mask = 1; mask < (1ull << m); ++mask) {
        CompatibilityEntry entry{std::vector<int>{}, Subspace(hd.q, 0), 0, false};
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) entry.edges.push_back(e);
        std::vector<const Hemisphere*> hs;
        std::vector<const FVec*> pts;
        for (std::size_t i = 0; i < hd.hems.size(); ++i) {
            if (sep_inside(hd.hems[i].sep_edges, entry.edges)) {
                hs.push_back(&hd.hems[i]);
                pts.push_back(&hd.points[i]);
            }
        }
        entry.sum = kernel_sum(f, entry.edges, hs, pts);
        entry.codim = static_cast<unsigned>(entry.edges.size()) - entry.sum.dim();
        entry.pass = entry.codim >= 1;
        if (!entry.pass) rep.pass = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

bool is_compatible_per_class(const HemisphereData& hd) {
    Fq f(hd.q);
    for (const auto& block : circuit_partition(hd.graph)) {
        std::vector<const Hemisphere*> hs;
        std::vector<const FVec*> pts;
        for (std::size_t i = 0; i < hd.hems.size(); ++i) {
            if (sep_inside(hd.hems[i].sep_edges, block)) {
                hs.push_back(&hd.hems[i]);
                pts.push_back(&hd.points[i]);
            }
        }
        Subspace s = kernel_sum(f, block, hs, pts);
        if (s.dim() >= block.size()) return false;
    }
    return true;
}

bool is_invertible(const HemisphereData& hd) {
    for (const FVec& p : hd.points)
        for (unsigned x : p)
            if (x % hd.q == 0) return false;
    return true;
}

EnrichedPoint ces_to_es(const HemisphereData& hd) {
    if (!is_invertible(hd))
        throw std::invalid_argument("hemisphere data is not invertible");
    if (!is_compatible(hd).pass)
        throw std::invalid_argument("hemisphere data is not compatible");
    auto rcs = relative_components(hd.graph);
    std::vector<FVec> scalars;
    for (const auto& rc : rcs) {
        int found = -1;
        for (std::size_t i = 0; i < hd.hems.size(); ++i)
            if (hd.hems[i].verts == rc.component) found = static_cast<int>(i);
        if (found < 0) throw std::logic_error("relative component is not a hemisphere");
        if (hd.hems[found].sep_edges != rc.sep_edges)
            throw std::logic_error("separating edge mismatch");
        scalars.push_back(hd.points[found]);
    }
    return make_enriched_point(hd.graph, hd.q, std::move(scalars));
}

HemisphereData es_to_ces(const EnrichedPoint& ep) {
    Fq f(ep.q);
    const MultiGraph& g = ep.graph;
    auto blocks = circuit_partition(g);

    // (vertex, edge) -> relative component index
    std::map<std::pair<int, int>, std::pair<int, int>> lookup;
    for (int i = 0; i < static_cast<int>(ep.rcs.size()); ++i)
        for (int j = 0; j < static_cast<int>(ep.rcs[i].sep_edges.size()); ++j)
            lookup[{ep.rcs[i].v, ep.rcs[i].sep_edges[j]}] = {i, j};
    auto value = [&](int v, int e) {
        auto [i, j] = lookup.at({v, e});
        return ep.scalars[i][j];
    };

    // Rescale the components along each block so both sides of every edge
    // agree, then read off a single matched value per edge.
    std::vector<unsigned> matched(g.edge_count(), 1);
    std::vector<unsigned> t(ep.rcs.size(), 0);  // 0 = unassigned
    for (const auto& block : blocks) {
        if (block.size() == 1 && g.is_loop(block[0])) continue;
        for (int seed_edge : block) {
            auto [a0, b0] = g.ends(seed_edge);
            int seed = lookup.at({a0, seed_edge}).first;
            if (t[seed]) continue;
            t[seed] = 1;
            std::vector<int> queue{seed};
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int ri = queue[i];
                for (std::size_t j = 0; j < ep.rcs[ri].sep_edges.size(); ++j) {
                    int e = ep.rcs[ri].sep_edges[j];
                    int u = ep.rcs[ri].v;
                    int w = g.other_end(e, u);
                    int ro = lookup.at({w, e}).first;
                    unsigned want = f.mul(t[ri], f.mul(value(u, e), f.inv(value(w, e))));
                    if (t[ro] == 0) {
                        t[ro] = want;
                        queue.push_back(ro);
                    } else if (t[ro] != want) {
                        throw std::logic_error("matching rescaling is inconsistent");
                    }
                }
            }
        }
        for (int e : block) {
            auto [a, b] = g.ends(e);
            int ra = lookup.at({a, e}).first;
            matched[e] = f.mul(t[ra], value(a, e));
        }
    }

    auto hems = hemispheres(g);
    std::vector<FVec> points;
    for (const auto& h : hems) {
        FVec p;
        for (int e : h.sep_edges) p.push_back(matched[e]);
        points.push_back(std::move(p));
    }
    return make_hemisphere_data(g, ep.q, std::move(points));
}

namespace {

struct BlockProblem {
    std::vector<int> edges;                 // the block, sorted
    std::vector<int> hem_idx;               // global hemisphere indices, DFS order
    std::vector<unsigned> sep_mask;         // per DFS position, over block coords
    std::vector<std::vector<FVec>> cands;   // candidate points per DFS position
    std::vector<std::vector<Subspace>> kers;  // kernels of the candidates
    std::vector<unsigned> unions;           // nonempty unions of sep masks
};

void block_dfs(const Fq& f, const BlockProblem& bp, std::size_t level,
               std::vector<int>& choice, std::vector<std::vector<int>>& out,
               std::size_t first_lo, std::size_t first_hi) {
    if (level == bp.hem_idx.size()) {
        out.push_back(choice);
        return;
    }
    std::size_t lo = (level == 0) ? first_lo : 0;
    std::size_t hi = (level == 0) ? first_hi : bp.cands[level].size();
    unsigned nloc = static_cast<unsigned>(bp.edges.size());
    for (std::size_t c = lo; c < hi; ++c) {
        choice[level] = static_cast<int>(c);
        bool ok = true;
        for (unsigned u : bp.unions) {
            if ((u & bp.sep_mask[level]) != bp.sep_mask[level]) continue;
            // sum the kernels of all assigned hemispheres supported inside u
            std::vector<FVec> gens;
            unsigned dim_u = static_cast<unsigned>(__builtin_popcount(u));
            std::vector<unsigned> coord(nloc, 0);
            {
                unsigned pos = 0;
                for (unsigned bit = 0; bit < nloc; ++bit)
                    if ((u >> bit) & 1) coord[bit] = pos++;
            }
            for (std::size_t l = 0; l <= level; ++l) {
                if ((bp.sep_mask[l] & u) != bp.sep_mask[l]) continue;
                for (const FVec& row : bp.kers[l][choice[l]].basis()) {
                    FVec v(dim_u, 0);
                    unsigned j = 0;
                    for (unsigned bit = 0; bit < nloc; ++bit) {
                        if ((bp.sep_mask[l] >> bit) & 1) v[coord[bit]] = row[j++];
                    }
                    gens.push_back(std::move(v));
                }
            }
            if (Subspace::span(f.q, dim_u, gens).dim() >= dim_u) {
                ok = false;
                break;
            }
        }
        if (ok) block_dfs(f, bp, level + 1, choice, out, first_lo, first_hi);
    }
}

}  // namespace

std::vector<HemisphereData> enumerate_ces(const MultiGraph& g, unsigned q,
                                          unsigned jobs) {
    Fq f(q);
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    auto hems = hemispheres(g);
    auto blocks = circuit_partition(g);

    std::vector<BlockProblem> problems;
    for (const auto& block : blocks) {
        if (block.size() > 20)
            throw std::invalid_argument("circuit block too large to enumerate");
        BlockProblem bp;
        bp.edges = block;
        for (std::size_t i = 0; i < hems.size(); ++i)
            if (block_of_sep(blocks, hems[i].sep_edges) ==
                static_cast<int>(&block - blocks.data()))
                bp.hem_idx.push_back(static_cast<int>(i));
        if (bp.hem_idx.empty()) continue;
        auto mask_of = [&](int hi) {
            unsigned m = 0;
            for (int e : hems[hi].sep_edges) {
                auto it = std::lower_bound(block.begin(), block.end(), e);
                m |= 1u << (it - block.begin());
            }
            return m;
        };
        std::sort(bp.hem_idx.begin(), bp.hem_idx.end(), [&](int a, int b) {
            unsigned ma = mask_of(a), mb = mask_of(b);
            int pa = __builtin_popcount(ma), pb = __builtin_popcount(mb);
            return std::tie(pa, ma, hems[a].verts) < std::tie(pb, mb, hems[b].verts);
        });
        std::set<unsigned> unions;
        for (int hi : bp.hem_idx) {
            unsigned m = mask_of(hi);
            bp.sep_mask.push_back(m);
            std::vector<unsigned> fresh{m};
            for (unsigned u : unions) fresh.push_back(u | m);
            unions.insert(fresh.begin(), fresh.end());
        }
        bp.unions.assign(unions.begin(), unions.end());
        for (int hi : bp.hem_idx) {
            auto cands = enumerate_proj(f, static_cast<unsigned>(hems[hi].sep_edges.size()));
            std::vector<Subspace> kers;
            for (const FVec& c : cands) kers.push_back(hyperplane_kernel(f, c));
            bp.cands.push_back(std::move(cands));
            bp.kers.push_back(std::move(kers));
        }
        problems.push_back(std::move(bp));
    }

    // Solve each block; parallelism splits the first block's first
    // candidate list, which keeps the assembled output order fixed.
    std::vector<std::vector<std::vector<int>>> solutions(problems.size());
    for (std::size_t pi = 0; pi < problems.size(); ++pi) {
        const BlockProblem& bp = problems[pi];
        std::size_t firstn = bp.cands[0].size();
        unsigned use_jobs = (jobs > 1 && pi == 0)
                                ? std::min<unsigned>(jobs, static_cast<unsigned>(firstn))
                                : 1;
        if (use_jobs <= 1) {
            std::vector<int> choice(bp.hem_idx.size(), -1);
            block_dfs(f, bp, 0, choice, solutions[pi], 0, firstn);
        } else {
            std::vector<std::vector<std::vector<int>>> chunk(use_jobs);
            std::vector<std::thread> threads;
            for (unsigned j = 0; j < use_jobs; ++j) {
                threads.emplace_back([&, j] {
                    std::vector<int> choice(bp.hem_idx.size(), -1);
                    block_dfs(f, bp, 0, choice, chunk[j], firstn * j / use_jobs,
                              firstn * (j + 1) / use_jobs);
                });
            }
            for (auto& t : threads) t.join();
            for (auto& c : chunk)
                for (auto& s : c) solutions[pi].push_back(std::move(s));
        }
    }

    // Cartesian product of the per-block solutions.
    std::vector<HemisphereData> out;
    for (const auto& sol : solutions)
        if (sol.empty()) return out;
    std::vector<std::size_t> pick(problems.size(), 0);
    while (true) {
        std::vector<FVec> points(hems.size());
        for (std::size_t pi = 0; pi < problems.size(); ++pi) {
            const BlockProblem& bp = problems[pi];
            const auto& sol = solutions[pi][pick[pi]];
            for (std::size_t l = 0; l < bp.hem_idx.size(); ++l)
                points[bp.hem_idx[l]] = bp.cands[l][sol[l]];
        }
        out.push_back(make_hemisphere_data(g, q, std::move(points)));
        // advance the odometer
        std::size_t pi = 0;
        while (pi < problems.size()) {
            if (++pick[pi] < solutions[pi].size()) break;
            pick[pi] = 0;
            ++pi;
        }
        if (pi == problems.size()) break;
        if (problems.empty()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HemisphereData> ces_at_point(const LabeledGraph& lg, const FieldPoint& p,
                                         unsigned q, unsigned jobs) {
    Specialization sp = specialize(lg, p);
    return enumerate_ces(sp.target.graph, q, jobs);
}

}  // namespace enriched
