#pragma once

#include <vector>

#include "tempsep/random_instances.hpp"
#include "tempsep/reachability.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep::test {

// Obviously-correct earliest arrival by fixpoint iteration over time-edges,
// independent of the layer-sweep in the library.
inline std::vector<int> slow_earliest_arrival(const TemporalGraph& g, Vertex s) {
    std::vector<int> arrive(g.n + 1, kUnreached);
    arrive[s] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const TimeEdge& e : g.edges) {
            auto relax = [&](Vertex from, Vertex to) {
                if (arrive[from] != kUnreached && arrive[from] <= e.t &&
                    (arrive[to] == kUnreached || arrive[to] > e.t)) {
                    arrive[to] = e.t;
                    changed = true;
                }
            };
            relax(e.u, e.v);
            relax(e.v, e.u);
        }
    }
    return arrive;
}

// Arbitrary random temporal graph (no structural promises).
inline TemporalGraph random_temporal_graph(int n, int tau, double edge_prob, Rng& rng) {
    std::vector<TimeEdge> es;
    for (int t = 1; t <= tau; ++t)
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng.chance(edge_prob)) es.push_back({u, v, t});
    return TemporalGraph::make(n, tau, std::move(es));
}

// Static connectivity: component id per vertex.
inline std::vector<int> components(const StaticGraph& g) {
    std::vector<int> comp(g.n + 1, 0);
    auto adj = g.adjacency();
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex v = 1; v <= g.n; ++v) {
        if (comp[v]) continue;
        comp[v] = ++next;
        stack.push_back(v);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : adj[x])
                if (!comp[w]) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
    }
    return comp;
}

}  // namespace tempsep::test
