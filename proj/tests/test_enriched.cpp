#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "enriched/enriched.hpp"
#include "enriched/random_graphs.hpp"
#include "support.hpp"

using namespace enriched;
using testsupport::brute_force_es;
using testsupport::identity_labeled;
using testsupport::scalars_of;
using testsupport::triangle;
using testsupport::two_gon;

TEST_CASE("standard multidegree") {
    // vertices sorted: u, v (2-gon); u, v, w (triangle)
    auto rcs2 = relative_components(two_gon());
    REQUIRE(rcs2.size() == 2);
    CHECK(standard_multidegree(two_gon(), rcs2[0]) == std::vector<int>{2, -2});

    auto rcs3 = relative_components(triangle());
    CHECK(standard_multidegree(triangle(), rcs3[0]) == std::vector<int>{2, -1, -1});

    MultiGraph path({"u", "v"}, {{"a", "u", "v"}});
    auto rcp = relative_components(path);
    CHECK(standard_multidegree(path, rcp[0]) == std::vector<int>{1, -1});
}

TEST_CASE("multidegrees sum to zero") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 6, 9);
        std::vector<int> total(g.vertex_count(), 0);
        for (const auto& rc : relative_components(g)) {
            auto d = standard_multidegree(g, rc);
            for (std::size_t v = 0; v < d.size(); ++v) total[v] += d[v];
        }
        for (int t : total) CHECK(t == 0);
    }
}

TEST_CASE("matching condition") {
    // triangle rows: u over (a,c), v over (a,b), w over (b,c); the circuit
    // forces F_v(b) * F_w(c) = F_u(c) once the a-column pair agrees
    CHECK(is_enriched(triangle(), 5, {{1, 1}, {1, 2}, {1, 3}}));
    CHECK_FALSE(is_enriched(triangle(), 5, {{1, 2}, {1, 2}, {1, 3}}));
    CHECK(is_enriched(two_gon(), 5, {{1, 3}, {1, 3}}));
    CHECK_FALSE(is_enriched(two_gon(), 5, {{1, 3}, {1, 2}}));

    // scaling a row leaves the condition alone
    CHECK(is_enriched(triangle(), 5, {{2, 2}, {1, 2}, {1, 3}}));
    CHECK(is_enriched(triangle(), 5, {{1, 1}, {4, 3}, {1, 3}}));
}

TEST_CASE("enriched point construction") {
    EnrichedPoint e = make_enriched_point(triangle(), 5, {{2, 2}, {3, 1}, {1, 3}});
    CHECK(e.scalars == std::vector<FVec>{{1, 1}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(make_enriched_point(triangle(), 5, {{1, 2}, {1, 2}, {1, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_enriched_point(triangle(), 5, {{1, 0}, {1, 1}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_es(two_gon(), 3).size() == 2);
    CHECK(enumerate_es(triangle(), 3).size() == 4);
    MultiGraph wedge({"v"}, {{"l1", "v", "v"}, {"l2", "v", "v"}});
    CHECK(enumerate_es(wedge, 7).size() == 1);

    for (unsigned q : {2u, 3u, 5u}) {
        auto pts = enumerate_es(triangle(), q);
        CHECK(pts.size() == (q - 1) * (q - 1));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
    }
}

TEST_CASE("enumeration is thread-count independent") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 5, 8);
        CHECK(enumerate_es(g, 3, 1) == enumerate_es(g, 3, 4));
    }
}

TEST_CASE("enumeration matches the exhaustive oracle") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 5, 7);
        for (unsigned q : {2u, 3u}) {
            auto fast = enumerate_es(g, q);
            CHECK(fast.size() ==
                  static_cast<std::size_t>(std::llround(std::pow(q - 1.0, dimension_N(g)))));
            CHECK(scalars_of(fast) == brute_force_es(g, q));
        }
    }
}

TEST_CASE("structures at a point") {
    auto lg = identity_labeled(triangle());
    CHECK(es_at_point(lg, make_field_point({"a"}), 5).size() == 4);
    CHECK(es_at_point(lg, make_field_point({"a", "b"}), 3).size() == 1);
    CHECK(es_at_point(lg, make_field_point({}), 2).size() == 1);
}

TEST_CASE("chart counts") {
    auto lg = identity_labeled(triangle());
    CHECK(gamma_es_count_at_point(lg, {}, make_field_point({}), 3) == 4);
    CHECK(gamma_es_count_at_point(lg, {}, make_field_point({"a"}), 3) == 0);
    CHECK(gamma_es_count_at_point(lg, {"a"}, make_field_point({"a"}), 5) == 4);
    CHECK_THROWS_AS(gamma_es_count_at_point(lg, {"a"}, make_field_point({}), 3),
                    std::invalid_argument);
}

TEST_CASE("chart counts match the quotient-data oracle on aligned fibers") {
    // the oracle models the structures indexed by the chart graph itself, so
    // it pairs with the chart whose target is that graph; equality is a
    // theorem only when the map from chart graph to fiber graph is aligned.
    // For non-aligned fibers the count rule reports zero by fiat while the
    // direct quotient model can be nonempty (see the next test case), so
    // there we only pin the zero.
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 4, 5);
        auto lg = identity_labeled(g);
        int m = static_cast<int>(g.edge_count());
        for (int smask = 0; smask < (1 << m); ++smask) {
            std::vector<int> s_idx;
            std::vector<std::string> units;
            for (int e = 0; e < m; ++e)
                if (smask & (1 << e)) {
                    s_idx.push_back(e);
                    units.push_back(g.edge_id(e));
                }
            long long fast =
                gamma_es_count_at_point(lg, {}, make_field_point(units), 3);
            if (is_aligned_contraction(contract(g, s_idx)))
                CHECK(fast == testsupport::brute_force_gamma_count(g, {}, s_idx, 3));
            else
                CHECK(fast == 0);

            // same comparison from a proper chart: restart the oracle on the
            // chart graph with the remaining degenerations
            for (int cmask = smask; ; cmask = (cmask - 1) & smask) {
                std::vector<EdgeId> chart_ids;
                for (int e = 0; e < m; ++e)
                    if (cmask & (1 << e)) chart_ids.push_back(g.edge_id(e));
                Contraction chart = contract_ids(g, chart_ids);
                std::vector<int> rest;
                for (int e = 0; e < m; ++e)
                    if ((smask & (1 << e)) && !chart.contracts_edge(e))
                        rest.push_back(chart.edge_map[e]);
                long long f2 =
                    gamma_es_count_at_point(lg, chart_ids, make_field_point(units), 3);
                if (is_aligned_contraction(contract(chart.target, rest)))
                    CHECK(f2 == testsupport::brute_force_gamma_count(chart.target, {},
                                                                     rest, 3));
                else
                    CHECK(f2 == 0);
                if (cmask == 0) break;
            }
        }
    }
}

TEST_CASE("non-aligned fiber where every quotient is forced trivial") {
    // Degenerating two opposite edges of a 4-cycle leaves every relative
    // component with a smoothed separating edge, so in the direct quotient
    // model every quotient is the trivial one and the empty tensor product is
    // trivial: exactly one structure survives.  The chart count rule still
    // reports zero because the fiber map is not aligned.  The two routes
    // genuinely differ here; this case freezes both answers.
    MultiGraph cyc({"s1", "s2", "s3", "s4"},
                   {{"q1", "s1", "s2"},
                    {"q2", "s2", "s3"},
                    {"q3", "s3", "s4"},
                    {"q4", "s1", "s4"}});
    auto lg = identity_labeled(cyc);
    std::vector<int> s = {cyc.edge_index("q1"), cyc.edge_index("q3")};
    CHECK_FALSE(is_aligned_contraction(contract(cyc, s)));
    CHECK(gamma_es_count_at_point(lg, {}, make_field_point({"q1", "q3"}), 2) == 0);
    CHECK(testsupport::brute_force_gamma_count(cyc, s, s, 2) == 1);
}

TEST_CASE("per-vertex bundle form") {
    for (unsigned q : {3u, 5u}) {
        for (const MultiGraph& g : {two_gon(), triangle()}) {
            for (const EnrichedPoint& e : enumerate_es(g, q)) {
                MainoStructure m = to_maino(e);
                CHECK(m.per_vertex.size() == g.vertex_count());
                CombLineBundle acc = trivial_bundle(g, q);
                for (const auto& b : m.per_vertex) acc = tensor(acc, b);
                CHECK(is_trivial(acc));
                CHECK(from_maino(m) == e);
            }
        }
    }
}
