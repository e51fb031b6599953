#include "tempsep/random_instances.hpp"

#include <algorithm>

namespace tempsep {

TemporalGraph random_temporal_split_graph(const RandomSplitSpec& spec, Rng& rng,
                                          TemporalSplitPartition* out_partition) {
    const int n = spec.n;
    const int tau = spec.tau;
    // side[v][t]: true = clique side in layer t.
    std::vector<std::vector<char>> side(n + 1, std::vector<char>(tau, 0));
    for (Vertex v = 1; v <= n; ++v) {
        bool clique = rng.chance(0.5);
        for (int t = 0; t < tau; ++t) side[v][t] = clique;
    }
    for (int i = 0; i < spec.switches && tau >= 2; ++i) {
        Vertex v = rng.uniform(1, n);
        int from = rng.uniform(1, tau - 1);  // flip from this layer onward
        for (int t = from; t < tau; ++t) side[v][t] = !side[v][t];
    }

    std::vector<TimeEdge> es;
    TemporalSplitPartition part;
    part.layers.resize(tau);
    for (int t = 0; t < tau; ++t) {
        VertexSet clique, indep;
        for (Vertex v = 1; v <= n; ++v) (side[v][t] ? clique : indep).push_back(v);
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                es.push_back({clique[i], clique[j], t + 1});
        for (Vertex c : clique)
            for (Vertex w : indep)
                if (rng.chance(spec.edge_prob)) es.push_back({std::min(c, w), std::max(c, w), t + 1});
        part.layers[t] = {std::move(clique), std::move(indep)};
    }
    if (out_partition) *out_partition = std::move(part);
    return TemporalGraph::make(n, tau, std::move(es));
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(map[i], map[rng.uniform(0, i)]);
    return Permutation{std::move(map)};
}

TemporalGraph random_temporal_permutation_graph(int n, int tau, int swaps_per_step, Rng& rng,
                                                TemporalPermutation* out_perms) {
    TemporalPermutation perms;
    perms.reserve(tau);
    Permutation cur = random_permutation(n, rng);
    std::vector<TimeEdge> es;
    for (int t = 1; t <= tau; ++t) {
        if (t > 1) {
            auto inv = cur.inverse();
            for (int i = 0; i < swaps_per_step && n >= 2; ++i) {
                // Swap the two segments landing on adjacent bottom points.
                int b = rng.uniform(1, n - 1);
                std::swap(cur.map[inv[b] - 1], cur.map[inv[b + 1] - 1]);
                std::swap(inv[b], inv[b + 1]);
            }
        }
        StaticGraph layer_graph = graph_from_permutation(cur);
        for (auto [u, v] : layer_graph.edges) es.push_back({u, v, t});
        perms.push_back(cur);
    }
    if (out_perms) *out_perms = std::move(perms);
    return TemporalGraph::make(n, tau, std::move(es));
}

SeparationInstance attach_random_terminals(TemporalGraph g, int max_k, Rng& rng) {
    Vertex s = rng.uniform(1, g.n);
    Vertex z = rng.uniform(1, g.n - 1);
    if (z >= s) ++z;
    int k = std::min(max_k, g.n - 2);
    if (k > 0) k = rng.uniform(0, k);
    return SeparationInstance::make(std::move(g), s, z, std::max(0, k));
}

}  // namespace tempsep
