#include "doctest.h"
#include "tempsep/brute_force.hpp"
#include "tempsep/permutation.hpp"
#include "tempsep/random_instances.hpp"
#include "tempsep/reductions.hpp"
#include "tempsep/split.hpp"

using namespace tempsep;

namespace {

StaticGraph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return StaticGraph::make(n, std::move(es));
}

bool oracle_yes(const SeparationInstance& inst) {
    OracleCaps caps;
    caps.max_n = 18;
    return min_separator_bruteforce(inst, caps).has_value();
}

// All 3-literal clause multisets over variables 1..n (positive or negative).
std::vector<std::vector<int>> all_clauses(int n) {
    std::vector<int> lits;
    for (int v = 1; v <= n; ++v) {
        lits.push_back(v);
        lits.push_back(-v);
    }
    std::vector<std::vector<int>> out;
    for (size_t a = 0; a < lits.size(); ++a)
        for (size_t b = a; b < lits.size(); ++b)
            for (size_t c = b; c < lits.size(); ++c)
                out.push_back({lits[a], lits[b], lits[c]});
    return out;
}

}  // namespace

TEST_CASE("cover gadget matches the worked example") {
    // G = ({v,w,x}, {{v,w}}), k = 1.
    auto g = StaticGraph::make(3, {{1, 2}});
    auto inst = vc_to_temporal_split(g, 1);
    CHECK(inst.graph.n == 11);
    CHECK(inst.graph.tau == 4);
    CHECK(inst.s == 1);
    CHECK(inst.z == 11);
    CHECK(inst.k == 4);
    CHECK(oracle_yes(inst));  // {v} covers the one edge

    // Every layer is a split graph.
    for (int t = 1; t <= 4; ++t) CHECK(split_decompose(layer(inst.graph, t)).has_value());
}

TEST_CASE("cover gadget on edgeless inputs") {
    for (int n = 1; n <= 3; ++n) {
        auto inst = vc_to_temporal_split(StaticGraph::make(n, {}), 0);
        CHECK(oracle_yes(inst));  // the empty cover suffices
    }
}

TEST_CASE("cover gadget equivalence on random graphs") {
    Rng rng(271828);
    for (int it = 0; it < 40; ++it) {
        int n = rng.uniform(1, 5);
        auto g = random_graph(n, rng.unit(), rng);
        int vc = static_cast<int>(min_vertex_cover_bruteforce(g).size());
        for (int k = 0; k <= n; ++k) {
            auto inst = vc_to_temporal_split(g, k);
            CHECK(oracle_yes(inst) == (vc <= k));
        }
    }
}

TEST_CASE("sat gadget sizes and worked formulas") {
    auto yes = sat3_to_temporal_perm(CnfFormula::make(1, {{1, 1, 1}}));
    CHECK(yes.graph.n == 7);
    CHECK(yes.graph.tau == 8);
    CHECK(yes.k == 3);
    CHECK(oracle_yes(yes));

    auto no = sat3_to_temporal_perm(CnfFormula::make(1, {{1, 1, 1}, {-1, -1, -1}}));
    CHECK(no.k == 5);
    CHECK_FALSE(oracle_yes(no));

    CHECK_THROWS_AS(sat3_to_temporal_perm(CnfFormula::make(2, {{1, -1, 2, -2}})),
                    std::invalid_argument);
}

TEST_CASE("sat gadget layers recognize and match the displayed permutation") {
    CnfFormula f = CnfFormula::make(3, {{1, -2, 3}, {-1, 2, 2}});
    auto inst = sat3_to_temporal_perm(f);
    auto tp = recognize_temporal_permutation(inst.graph);
    // Layer n+1 maps s in front of every variable vertex.
    SatPermLayout ly{3, 2};
    const int fn = ly.f_var(3);
    std::vector<int> expected(inst.graph.n);
    expected[0] = fn;
    for (int v = 2; v <= fn; ++v) expected[v - 1] = v - 1;
    for (int v = fn + 1; v <= inst.graph.n; ++v) expected[v - 1] = v;
    CHECK(tp[ly.n].map == expected);
}

TEST_CASE("sat gadget equivalence on small formulas") {
    Rng rng(1);
    for (int n = 1; n <= 2; ++n) {
        auto clauses = all_clauses(n);
        // m = 1 exhaustively, m = 2 on a random slice.
        for (const auto& c : clauses) {
            CnfFormula f = CnfFormula::make(n, {c});
            CHECK(oracle_yes(sat3_to_temporal_perm(f)) == cnf_satisfiable_bruteforce(f));
        }
        for (int it = 0; it < 25; ++it) {
            auto c1 = clauses[rng.uniform(0, (int)clauses.size() - 1)];
            auto c2 = clauses[rng.uniform(0, (int)clauses.size() - 1)];
            CnfFormula f = CnfFormula::make(n, {c1, c2});
            CHECK(oracle_yes(sat3_to_temporal_perm(f)) == cnf_satisfiable_bruteforce(f));
        }
    }
}

TEST_CASE("switch gadget equals minimum vertex cover") {
    auto single = vc_to_min_switching(StaticGraph::make(2, {{1, 2}}));
    CHECK(min_switching_bruteforce(single) == 1);

    auto triangle = vc_to_min_switching(StaticGraph::make(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(min_switching_bruteforce(triangle) == 2);

    Rng rng(31415);
    int done = 0;
    while (done < 30) {
        int n = rng.uniform(2, 5);
        auto g = random_graph(n, 0.5, rng);
        if (g.edges.empty()) continue;
        auto tg = vc_to_min_switching(g);
        CHECK(tg.tau == (int)g.edges.size() + 1);
        for (int t = 1; t <= tg.tau; ++t) CHECK(split_decompose(layer(tg, t)).has_value());
        CHECK(min_switching_bruteforce(tg) ==
              (int)min_vertex_cover_bruteforce(g).size());
        ++done;
    }
    CHECK_THROWS_AS(vc_to_min_switching(StaticGraph::make(3, {})), std::invalid_argument);
}

TEST_CASE("dimacs parsing") {
    auto f = CnfFormula::parse_dimacs(
        "c example\np cnf 3 2\n1 -2 3 0\n-1 2 0\n");
    CHECK(f.variables == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[1] == std::vector<int>{-1, 2});
    CHECK(cnf_satisfiable_bruteforce(f));

    CHECK_THROWS_AS(CnfFormula::parse_dimacs("1 2 0\n"), ParseError);
    CHECK_THROWS_AS(CnfFormula::parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(CnfFormula::parse_dimacs("p cnf 1 1\n2 0\n"), std::invalid_argument);
}
