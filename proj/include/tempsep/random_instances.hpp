#pragma once

#include <cstdint>
#include <random>

#include "tempsep/permutation.hpp"
#include "tempsep/split.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// Seeded generator with hand-rolled bounded draws so identical seeds give
// identical output everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }
    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

struct RandomSplitSpec {
    int n = 6;
    int tau = 3;
    int switches = 0;       // vertices that flip sides at a random layer
    double edge_prob = 0.3;  // probability of each clique-independent edge
};

// Random temporal split graph: a constant random bipartition plus a few
// injected side switches; every layer is a clique completed on the clique
// side plus random edges into the independent side. When out_partition is
// given, the constructing per-layer partition is stored there.
TemporalGraph random_temporal_split_graph(const RandomSplitSpec& spec, Rng& rng,
                                          TemporalSplitPartition* out_partition = nullptr);

// Random temporal permutation graph: a random first permutation, then a walk
// applying `swaps_per_step` random adjacent transpositions per layer.
TemporalGraph random_temporal_permutation_graph(int n, int tau, int swaps_per_step, Rng& rng,
                                                TemporalPermutation* out_perms = nullptr);

// Random distinct terminals and a budget in [0, max_k] for a graph.
SeparationInstance attach_random_terminals(TemporalGraph g, int max_k, Rng& rng);

Permutation random_permutation(int n, Rng& rng);

}  // namespace tempsep
