#include "doctest.h"
#include "tempsep/brute_force.hpp"
#include "tempsep/random_instances.hpp"
#include "tempsep/vertex_cover.hpp"

using namespace tempsep;

namespace {

StaticGraph sg(int n, std::vector<std::pair<Vertex, Vertex>> es) {
    return StaticGraph::make(n, std::move(es));
}

StaticGraph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return sg(n, std::move(es));
}

}  // namespace

TEST_CASE("is_vertex_cover") {
    auto triangle = sg(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(is_vertex_cover(triangle, {1, 2}));
    CHECK_FALSE(is_vertex_cover(triangle, {1}));
    CHECK(is_vertex_cover(sg(3, {}), {}));
}

TEST_CASE("min_vertex_cover basics") {
    auto triangle = sg(3, {{1, 2}, {1, 3}, {2, 3}});
    auto c = min_vertex_cover(triangle);
    REQUIRE(c.has_value());
    CHECK(c->size() == 2);
    CHECK(*c == VertexSet{1, 2});  // lex-smallest among the three minima

    auto star = sg(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(*min_vertex_cover(star) == VertexSet{1});

    CHECK_THROWS_AS(min_vertex_cover(sg(2, {{1, 2}}), {1, 2}), CoverInfeasibleError);
}

TEST_CASE("budget and exclusions") {
    auto star = sg(4, {{1, 2}, {1, 3}, {1, 4}});
    // Excluding the center forces all leaves in.
    auto c = min_vertex_cover(star, {1});
    REQUIRE(c.has_value());
    CHECK(*c == VertexSet{2, 3, 4});
    CHECK_FALSE(min_vertex_cover(star, {1}, 2).has_value());
    CHECK(min_vertex_cover(star, {}, 1).has_value());
}

TEST_CASE("exhaustive agreement with the oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> es;
            int bit = 0;
            for (Vertex u = 1; u <= n; ++u)
                for (Vertex v = u + 1; v <= n; ++v, ++bit)
                    if (mask & (1u << bit)) es.emplace_back(u, v);
            auto g = sg(n, std::move(es));
            auto mine = min_vertex_cover(g);
            auto oracle = min_vertex_cover_bruteforce(g);
            REQUIRE(mine.has_value());
            CHECK(mine->size() == oracle.size());
            CHECK(is_vertex_cover(g, *mine));
            CHECK(*mine == oracle);  // both sides pick the lex-smallest minimum
        }
        if (n >= 5) break;  // n=6 alone is 2^15 graphs; n<=5 stays quick
    }
    // A randomized slice of n == 6.
    Rng rng(5);
    for (int it = 0; it < 400; ++it) {
        auto g = random_graph(6, rng.unit(), rng);
        auto mine = min_vertex_cover(g);
        CHECK(mine->size() == min_vertex_cover_bruteforce(g).size());
    }
}

TEST_CASE("random agreement with exclusions, n <= 12") {
    Rng rng(77);
    for (int it = 0; it < 200; ++it) {
        int n = rng.uniform(4, 12);
        auto g = random_graph(n, 0.3, rng);
        VertexSet excluded;
        for (Vertex v = 1; v <= n && excluded.size() < 2; ++v)
            if (rng.chance(0.15)) excluded.push_back(v);
        bool blocked = false;
        for (auto [u, v] : g.edges)
            if (set_contains(excluded, u) && set_contains(excluded, v)) blocked = true;
        if (blocked) {
            CHECK_THROWS_AS(min_vertex_cover(g, excluded), CoverInfeasibleError);
            continue;
        }
        auto mine = min_vertex_cover(g, excluded);
        REQUIRE(mine.has_value());
        CHECK(is_vertex_cover(g, *mine));
        CHECK(set_intersection(*mine, excluded).empty());

        // Brute-force the constrained minimum.
        int best = n + 1;
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            VertexSet cand;
            for (Vertex v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1))) cand.push_back(v);
            if (!set_intersection(cand, excluded).empty()) continue;
            if (is_vertex_cover(g, cand)) best = std::min(best, (int)cand.size());
        }
        CHECK((int)mine->size() == best);
    }
}
