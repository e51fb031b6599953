#pragma once

#include <optional>
#include <vector>

#include "tempsep/errors.hpp"
#include "tempsep/split.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// Exhaustive oracles every solver is validated against. Each oracle comes in
// two flavors: the default OpenMP-parallel kernel scanning subset ranges in
// parallel, and a plain serial reference built directly on the core
// operations, kept for testing the kernels against.
//
// Caps are configuration so callers can tighten or loosen them.
struct OracleCaps {
    int max_n = 14;
    long long max_partition_product = 2'000'000;
};

// Smallest temporal (s,z)-separator of size <= k, scanning subsets of
// V \ {s,z} in ascending size and lexicographic order within a size.
// Throws CapExceededError when n exceeds the cap.
std::optional<VertexSet> min_separator_bruteforce(const SeparationInstance& inst,
                                                  OracleCaps caps = {});
std::optional<VertexSet> min_separator_bruteforce_serial(const SeparationInstance& inst,
                                                         OracleCaps caps = {});

// All inclusion-minimal temporal (s,z)-separators, sorted by size then
// lexicographically.
std::vector<VertexSet> all_minimal_separators_bruteforce(const TemporalGraph& g, Vertex s,
                                                         Vertex z, OracleCaps caps = {});
std::vector<VertexSet> all_minimal_separators_bruteforce_serial(const TemporalGraph& g, Vertex s,
                                                                Vertex z, OracleCaps caps = {});

// Minimum number of switching vertices over the cartesian product of
// per-layer split partitions. Throws NotSplitError on a non-split layer and
// CapExceededError when a cap is exceeded.
int min_switching_bruteforce(const TemporalGraph& g, OracleCaps caps = {});
int min_switching_bruteforce_serial(const TemporalGraph& g, OracleCaps caps = {});

// Exhaustive minimum vertex cover (smallest size, lexicographically first).
VertexSet min_vertex_cover_bruteforce(const StaticGraph& g, OracleCaps caps = {});
VertexSet min_vertex_cover_bruteforce_serial(const StaticGraph& g, OracleCaps caps = {});

// All split partitions of a static graph by scanning every bipartition.
std::vector<SplitPartition> all_split_partitions_bruteforce(const StaticGraph& g,
                                                            OracleCaps caps = {});

}  // namespace tempsep
