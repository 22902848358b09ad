#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "enriched/compactified.hpp"
#include "enriched/random_graphs.hpp"
#include "support.hpp"

using namespace enriched;
using testsupport::identity_labeled;
using testsupport::triangle;
using testsupport::two_gon;

TEST_CASE("hemisphere data construction") {
    HemisphereData hd = make_hemisphere_data(two_gon(), 3, {{2, 2}, {1, 1}});
    CHECK(hd.points == std::vector<FVec>{{1, 1}, {1, 1}});
    CHECK_THROWS_AS(make_hemisphere_data(two_gon(), 3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hemisphere_data(two_gon(), 3, {{0, 0}, {1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_hemisphere_data(two_gon(), 3, {{1}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("compatibility on the 2-gon") {
    // the two hemisphere kernels share the same two-edge subset, so they must
    // coincide, which happens exactly when the points agree
    CHECK(is_compatible(make_hemisphere_data(two_gon(), 3, {{1, 2}, {1, 2}})).pass);
    CHECK(is_compatible(make_hemisphere_data(two_gon(), 3, {{0, 1}, {0, 1}})).pass);
    CHECK_FALSE(is_compatible(make_hemisphere_data(two_gon(), 3, {{1, 2}, {1, 1}})).pass);

    CompatibilityReport r = is_compatible(make_hemisphere_data(two_gon(), 3, {{1, 2}, {1, 1}}));
    CHECK(r.entries.size() == 3);
    for (const auto& entry : r.entries) {
        if (entry.edges == std::vector<int>{0, 1}) {
            CHECK(entry.codim == 0);
            CHECK_FALSE(entry.pass);
        } else {
            CHECK(entry.codim == 1);
            CHECK(entry.pass);
        }
    }
}

TEST_CASE("invertibility") {
    CHECK(is_invertible(make_hemisphere_data(two_gon(), 3, {{1, 2}, {1, 2}})));
    CHECK_FALSE(is_invertible(make_hemisphere_data(two_gon(), 3, {{1, 0}, {1, 0}})));
    CHECK_FALSE(is_invertible(make_hemisphere_data(two_gon(), 3, {{0, 1}, {0, 1}})));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_ces(two_gon(), 3).size() == 4);
    CHECK(enumerate_ces(two_gon(), 5).size() == 6);
    for (unsigned q : {2u, 3u, 5u, 7u})
        CHECK(enumerate_ces(two_gon(), q).size() == q + 1);

    MultiGraph path({"u", "v"}, {{"a", "u", "v"}});
    CHECK(enumerate_ces(path, 3).size() == 1);

    // frozen regression value
    CHECK(enumerate_ces(triangle(), 2).size() == 13);
}

TEST_CASE("enumeration matches the unfiltered oracle") {
    std::mt19937 rng(61);
    CHECK(enumerate_ces(triangle(), 2) == testsupport::brute_force_ces(triangle(), 2));
    CHECK(enumerate_ces(two_gon(), 5) == testsupport::brute_force_ces(two_gon(), 5));
    for (int trial = 0; trial < 8; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 3, 4);
        CHECK(enumerate_ces(g, 2) == testsupport::brute_force_ces(g, 2));
    }
}

TEST_CASE("enumeration is thread-count independent") {
    CHECK(enumerate_ces(triangle(), 3, 1) == enumerate_ces(triangle(), 3, 4));
    CHECK(enumerate_ces(two_gon(), 7, 1) == enumerate_ces(two_gon(), 7, 3));
}

TEST_CASE("per-class scan agrees with the full scan") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        MultiGraph g = random_connected_multigraph(rng, 4, 6);
        auto hems = hemispheres(g);
        Fq f(3);
        // random hemisphere data, compatible or not
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<FVec> pts;
            for (const auto& h : hems) {
                FVec v(h.sep_edges.size());
                bool nonzero = false;
                while (!nonzero)
                    for (auto& x : v) {
                        x = std::uniform_int_distribution<unsigned>(0, 2)(rng);
                        nonzero |= (x != 0);
                    }
                pts.push_back(std::move(v));
            }
            if (hems.empty()) break;
            HemisphereData hd = make_hemisphere_data(g, 3, std::move(pts));
            CHECK(is_compatible(hd).pass == is_compatible_per_class(hd));
        }
    }
}

TEST_CASE("round trips between structures and hemisphere data") {
    for (unsigned q : {3u, 5u}) {
        for (const MultiGraph& g : {two_gon(), triangle()}) {
            auto es = enumerate_es(g, q);
            for (const EnrichedPoint& e : es) {
                HemisphereData hd = es_to_ces(e);
                CHECK(is_compatible(hd).pass);
                CHECK(is_invertible(hd));
                CHECK(ces_to_es(hd) == e);
            }
            long long invertible = 0;
            for (const HemisphereData& hd : enumerate_ces(g, q)) {
                if (!is_invertible(hd)) continue;
                ++invertible;
                CHECK(es_to_ces(ces_to_es(hd)) == hd);
            }
            CHECK(invertible == static_cast<long long>(es.size()));
        }
    }
}

TEST_CASE("round trip on a tree") {
    MultiGraph path({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "v", "w"}});
    auto es = enumerate_es(path, 5);
    REQUIRE(es.size() == 1);
    HemisphereData hd = es_to_ces(es[0]);
    for (const FVec& p : hd.points) CHECK(p == FVec{1});
    CHECK(ces_to_es(hd) == es[0]);
}

TEST_CASE("conversion preconditions") {
    HemisphereData bad = make_hemisphere_data(two_gon(), 3, {{1, 2}, {1, 1}});
    CHECK_THROWS_AS(ces_to_es(bad), std::invalid_argument);
    HemisphereData boundary = make_hemisphere_data(two_gon(), 3, {{1, 0}, {1, 0}});
    CHECK_THROWS_AS(ces_to_es(boundary), std::invalid_argument);
}

TEST_CASE("hemisphere data at a point") {
    auto lg = identity_labeled(triangle());
    CHECK(ces_at_point(lg, make_field_point({"a", "b"}), 3).size() == 1);
    CHECK(ces_at_point(lg, make_field_point({"a"}), 3).size() == 4);
    auto lg2 = identity_labeled(two_gon());
    CHECK(ces_at_point(lg2, make_field_point({"e1", "e2"}), 3).size() == 1);
}
