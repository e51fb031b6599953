#include <numeric>
#include <set>

#include "doctest.h"
#include "tempsep/brute_force.hpp"
#include "tempsep/random_instances.hpp"
#include "tempsep/reachability.hpp"
#include "tempsep/reductions.hpp"
#include "tempsep/split.hpp"
#include "test_support.hpp"

using namespace tempsep;

namespace {

StaticGraph sg(int n, std::vector<std::pair<Vertex, Vertex>> es) {
    return StaticGraph::make(n, std::move(es));
}

std::set<std::pair<VertexSet, VertexSet>> as_pair_set(const std::vector<SplitPartition>& ps) {
    std::set<std::pair<VertexSet, VertexSet>> out;
    for (const auto& p : ps) out.insert({p.clique, p.independent});
    return out;
}

StaticGraph random_split_layer(int n, double edge_prob, Rng& rng) {
    RandomSplitSpec spec{n, 1, 0, edge_prob};
    TemporalGraph g = random_temporal_split_graph(spec, rng);
    return layer(g, 1);
}

// A fixed-partition worked instance: s=1, z=2, c1=3, c2=4, i1=5.
SeparationInstance worked_example(int k) {
    auto g = TemporalGraph::make(5, 2, {{3, 4, 1}, {1, 3, 1}, {3, 5, 1}, {3, 4, 2}, {2, 4, 2}});
    return SeparationInstance::make(g, 1, 2, k);
}

}  // namespace

TEST_CASE("split_decompose rejects non-split graphs") {
    auto c5 = sg(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK_FALSE(split_decompose(c5).has_value());
    auto c4 = sg(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_FALSE(split_decompose(c4).has_value());
    // 2K2 is the third forbidden induced subgraph.
    CHECK_FALSE(split_decompose(sg(4, {{1, 2}, {3, 4}})).has_value());
}

TEST_CASE("split_decompose on K3") {
    auto d = split_decompose(sg(3, {{1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(d.has_value());
    CHECK(d->forced_clique.empty());
    CHECK(d->forced_independent.empty());
    CHECK(d->flexible == VertexSet{1, 2, 3});
    CHECK(d->flexible_kind == FlexKind::Clique);
}

TEST_CASE("split_decompose on the star K_{1,3}") {
    auto star = sg(4, {{1, 2}, {1, 3}, {1, 4}});
    auto d = split_decompose(star);
    REQUIRE(d.has_value());
    CHECK(d->forced_clique == VertexSet{1});
    CHECK(d->forced_independent.empty());
    CHECK(d->flexible == VertexSet{2, 3, 4});
    CHECK(d->flexible_kind == FlexKind::Independent);
}

TEST_CASE("decomposition matches the brute-forced partition intersections") {
    Rng rng(2024);
    int done = 0;
    while (done < 200) {
        int n = rng.uniform(1, 8);
        auto g = random_split_layer(n, rng.unit() * 0.8, rng);
        auto parts = all_split_partitions_bruteforce(g);
        REQUIRE(!parts.empty());
        auto d = split_decompose(g);
        REQUIRE(d.has_value());

        Bitset fc = Bitset::from_set(n + 1, parts[0].clique);
        Bitset fi = Bitset::from_set(n + 1, parts[0].independent);
        for (const auto& p : parts) {
            fc &= Bitset::from_set(n + 1, p.clique);
            fi &= Bitset::from_set(n + 1, p.independent);
        }
        CHECK(d->forced_clique == fc.to_set());
        CHECK(d->forced_independent == fi.to_set());
        VertexSet all(n);
        std::iota(all.begin(), all.end(), 1);
        CHECK(d->flexible ==
              set_difference(all, set_union(d->forced_clique, d->forced_independent)));
        // Q is complete to the forced clique and anticomplete to the forced
        // independent set.
        for (Vertex q : d->flexible) {
            for (Vertex c : d->forced_clique) CHECK(g.has_edge(q, c));
            for (Vertex i : d->forced_independent) CHECK_FALSE(g.has_edge(q, i));
        }
        ++done;
    }
}

TEST_CASE("all_split_partitions equals the brute-force family") {
    auto k3 = sg(3, {{1, 2}, {1, 3}, {2, 3}});
    auto d3 = split_decompose(k3);
    CHECK(all_split_partitions(*d3, k3).size() == 4);

    auto e2 = sg(2, {{1, 2}});
    auto de = split_decompose(e2);
    CHECK(as_pair_set(all_split_partitions(*de, e2)) ==
          as_pair_set(all_split_partitions_bruteforce(e2)));

    auto empty2 = sg(2, {});
    auto d0 = split_decompose(empty2);
    REQUIRE(d0.has_value());
    CHECK(d0->flexible_kind == FlexKind::Independent);
    for (const auto& p : all_split_partitions(*d0, empty2)) CHECK(p.clique.size() <= 1);

    Rng rng(31337);
    for (int it = 0; it < 250; ++it) {
        int n = rng.uniform(1, 8);
        auto g = random_split_layer(n, rng.unit() * 0.8, rng);
        auto d = split_decompose(g);
        REQUIRE(d.has_value());
        CHECK(as_pair_set(all_split_partitions(*d, g)) ==
              as_pair_set(all_split_partitions_bruteforce(g)));
    }
    // Detection agrees with brute force on arbitrary graphs too.
    for (int it = 0; it < 150; ++it) {
        int n = rng.uniform(1, 7);
        std::vector<std::pair<Vertex, Vertex>> es;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng.chance(0.4)) es.emplace_back(u, v);
        auto g = sg(n, std::move(es));
        CHECK(split_decompose(g).has_value() == !all_split_partitions_bruteforce(g).empty());
    }
}

TEST_CASE("min_switching_partition basics") {
    // Identical split layers: a constant partition exists.
    Rng rng(8);
    auto one = random_split_layer(6, 0.4, rng);
    std::vector<TimeEdge> es;
    for (int t = 1; t <= 3; ++t)
        for (auto [u, v] : one.edges) es.push_back({u, v, t});
    auto rep = min_switching_partition(TemporalGraph::make(6, 3, std::move(es)));
    CHECK(rep.p == 0);
    CHECK(rep.switching.empty());

    // tau = 1 never switches.
    RandomSplitSpec spec{7, 1, 0, 0.5};
    auto g1 = random_temporal_split_graph(spec, rng);
    CHECK(min_switching_partition(g1).p == 0);

    // The single-edge cover gadget needs exactly one switch.
    auto gadget = vc_to_min_switching(sg(2, {{1, 2}}));
    CHECK(min_switching_partition(gadget).p == 1);

    // A non-split layer is reported with its index.
    auto bad = TemporalGraph::make(5, 2, {{1, 2, 1}, {1, 2, 2}, {3, 4, 2}});
    CHECK_THROWS_AS(min_switching_partition(bad), NotSplitError);
    try {
        min_switching_partition(bad);
    } catch (const NotSplitError& e) {
        CHECK(e.layer == 2);
    }
}

TEST_CASE("min_switching_partition is optimal and valid") {
    Rng rng(99991);
    for (int it = 0; it < 150; ++it) {
        int n = rng.uniform(2, 7);
        int tau = rng.uniform(1, 3);
        RandomSplitSpec spec{n, tau, rng.uniform(0, 3), 0.25 + rng.unit() * 0.35};
        auto g = random_temporal_split_graph(spec, rng);
        auto rep = min_switching_partition(g);
        CHECK(rep.p == min_switching_bruteforce(g));
        CHECK((int)rep.switching.size() == rep.p);
        REQUIRE(rep.partition.tau() == tau);
        for (int t = 0; t < tau; ++t) {
            const auto& part = rep.partition.layers[t];
            auto gt = layer(g, t + 1);
            CHECK((int)(part.clique.size() + part.independent.size()) == n);
            CHECK(set_intersection(part.clique, part.independent).empty());
            for (size_t i = 0; i < part.clique.size(); ++i)
                for (size_t j = i + 1; j < part.clique.size(); ++j)
                    CHECK(gt.has_edge(part.clique[i], part.clique[j]));
            for (size_t i = 0; i < part.independent.size(); ++i)
                for (size_t j = i + 1; j < part.independent.size(); ++j)
                    CHECK_FALSE(gt.has_edge(part.independent[i], part.independent[j]));
        }
    }
}

TEST_CASE("fixed-partition enumeration on the worked example") {
    auto inst = worked_example(1);
    auto rep = min_switching_partition(inst.graph);
    REQUIRE(rep.p == 0);
    auto family = enumerate_separators_fixed_partition(inst, rep.partition);
    CHECK(family == std::vector<VertexSet>{{4}, {3, 4}, {3}});

    auto minimal = all_minimal_separators_bruteforce(inst.graph, inst.s, inst.z);
    CHECK(minimal == std::vector<VertexSet>{{3}, {4}});
    for (const auto& m : minimal)
        CHECK(std::find(family.begin(), family.end(), m) != family.end());
}

TEST_CASE("fixed-partition enumeration properties") {
    Rng rng(4242);
    int done = 0;
    while (done < 150) {
        int n = rng.uniform(3, 9);
        int tau = rng.uniform(1, 4);
        RandomSplitSpec spec{n, tau, 0, 0.2 + rng.unit() * 0.4};
        TemporalSplitPartition part;
        auto g = random_temporal_split_graph(spec, rng, &part);
        Vertex s = rng.uniform(1, n);
        Vertex z = rng.uniform(1, n - 1);
        if (z >= s) ++z;
        if (g.has_edge_any_layer(s, z)) continue;
        auto inst = SeparationInstance::make(g, s, z, n - 2);
        auto family = enumerate_separators_fixed_partition(inst, part);

        CHECK((int)family.size() <= tau + 1);
        for (const auto& cand : family) CHECK(is_temporal_separator(inst, cand));
        for (const auto& m : all_minimal_separators_bruteforce(g, s, z))
            CHECK(std::find(family.begin(), family.end(), m) != family.end());
        ++done;
    }
}

TEST_CASE("fixed-partition enumeration preconditions") {
    // Terminals sharing a time-edge is infeasible.
    auto g = TemporalGraph::make(3, 1, {{1, 2, 1}});
    auto inst = SeparationInstance::make(g, 1, 2, 1);
    TemporalSplitPartition part{{{{1, 2}, {3}}}};
    CHECK_THROWS_AS(enumerate_separators_fixed_partition(inst, part), InfeasibleError);

    // The empty set appears when nothing connects the terminals.
    auto quiet = TemporalGraph::make(3, 1, {});
    auto qinst = SeparationInstance::make(quiet, 1, 3, 1);
    TemporalSplitPartition qpart{{{{}, {1, 2, 3}}}};
    auto family = enumerate_separators_fixed_partition(qinst, qpart);
    CHECK(std::find(family.begin(), family.end(), VertexSet{}) != family.end());

    // A non-terminal switching vertex violates the precondition.
    auto sw = TemporalGraph::make(4, 2, {{1, 3, 1}, {3, 4, 2}});
    auto sinst = SeparationInstance::make(sw, 1, 2, 1);
    TemporalSplitPartition spart{{{{3}, {1, 2, 4}}, {{4}, {1, 2, 3}}}};
    CHECK_THROWS_AS(enumerate_separators_fixed_partition(sinst, spart), std::invalid_argument);
}

TEST_CASE("core set T is contained in every returned candidate") {
    // s=1 meets 3 at time 1, 3 meets z=2 at time 2: T = {3}.
    auto g = TemporalGraph::make(4, 2, {{1, 3, 1}, {2, 3, 2}, {1, 4, 1}});
    auto inst = SeparationInstance::make(g, 1, 2, 2);
    auto rep = min_switching_partition(g);
    REQUIRE(set_difference(rep.switching, make_set({1, 2})).empty());
    auto family = enumerate_separators_fixed_partition(inst, rep.partition);
    for (const auto& cand : family) CHECK(set_contains(cand, 3));
}

TEST_CASE("solve_split_fpt on the worked example") {
    auto yes = solve_split_fpt(worked_example(1));
    REQUIRE(yes.status == SolveStatus::Found);
    CHECK(*yes.witness == VertexSet{3});  // lex-smallest of the two minima

    auto no = solve_split_fpt(worked_example(0));
    CHECK(no.status == SolveStatus::NotFound);
}

TEST_CASE("with no switching the candidate family is the fixed-partition one") {
    auto inst = worked_example(1);
    auto rep = min_switching_partition(inst.graph);
    REQUIRE(rep.p == 0);
    CHECK(split_candidate_family(inst, rep.partition) ==
          enumerate_separators_fixed_partition(inst, rep.partition));
}

TEST_CASE("solve_split_fpt agrees with the oracle") {
    Rng rng(555);
    int infeasible_seen = 0;
    for (int it = 0; it < 120; ++it) {
        int n = rng.uniform(4, 9);
        int tau = rng.uniform(1, 4);
        int switches = it % 10 == 0 ? 3 : rng.uniform(0, 2);
        RandomSplitSpec spec{n, tau, switches, 0.15 + rng.unit() * 0.35};
        auto g = random_temporal_split_graph(spec, rng);
        auto inst = attach_random_terminals(std::move(g), 4, rng);
        auto mine = solve_split_fpt(inst);
        auto oracle = min_separator_bruteforce(inst);
        if (mine.status == SolveStatus::Infeasible) {
            ++infeasible_seen;
            CHECK(inst.graph.has_edge_any_layer(inst.s, inst.z));
            CHECK_FALSE(oracle.has_value());
            continue;
        }
        CHECK(mine.yes() == oracle.has_value());
        if (mine.yes()) {
            CHECK(mine.witness->size() == oracle->size());
            CHECK(is_temporal_separator(inst, *mine.witness));
        }
    }
    CHECK(infeasible_seen > 0);
}

TEST_CASE("the candidate family covers every minimal separator, even with switching") {
    Rng rng(8080);
    int done = 0;
    while (done < 60) {
        int n = rng.uniform(4, 8);
        int tau = rng.uniform(2, 3);
        RandomSplitSpec spec{n, tau, rng.uniform(1, 2), 0.3};
        auto g = random_temporal_split_graph(spec, rng);
        Vertex s = 1, z = n;
        if (g.has_edge_any_layer(s, z)) continue;
        auto inst = SeparationInstance::make(g, s, z, n - 2);
        auto rep = min_switching_partition(inst.graph);
        auto family = split_candidate_family(inst, rep.partition);
        for (const auto& m : all_minimal_separators_bruteforce(inst.graph, s, z))
            CHECK(std::find(family.begin(), family.end(), m) != family.end());
        ++done;
    }
}
