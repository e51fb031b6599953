#pragma once

#include <optional>
#include <vector>

#include "tempsep/errors.hpp"
#include "tempsep/solve.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// A split partition (C, I): C induces a clique, I an independent set,
// together they cover 1..n.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    bool operator==(const SplitPartition&) const = default;
};

enum class FlexKind { Clique, Independent, Empty };

// Decomposition of a split graph into the vertices forced onto the clique
// side in every split partition, the vertices forced onto the independent
// side, and the flexible remainder Q. Q induces a clique or an independent
// set and is completely joined to the forced clique and to nothing in the
// forced independent set.
struct SplitDecomposition {
    VertexSet forced_clique;
    VertexSet forced_independent;
    VertexSet flexible;
    FlexKind flexible_kind = FlexKind::Empty;
};

// One split partition per layer.
struct TemporalSplitPartition {
    std::vector<SplitPartition> layers;

    int tau() const { return static_cast<int>(layers.size()); }
};

// A temporal split partition together with its switching vertices, i.e. the
// vertices on the clique side in some layer and the independent side in
// another.
struct SwitchingReport {
    TemporalSplitPartition partition;
    VertexSet switching;
    int p = 0;
};

// Recognition plus ambiguity analysis; nullopt when g is not a split graph.
std::optional<SplitDecomposition> split_decompose(const StaticGraph& g);

// Exactly the split partitions of g, reconstructed from the decomposition.
// Requires d == split_decompose(g).
std::vector<SplitPartition> all_split_partitions(const SplitDecomposition& d,
                                                 const StaticGraph& g);

// The switching vertices of a partition.
VertexSet switching_vertices(const TemporalSplitPartition& part);

// A temporal split partition of g minimizing the number of switching
// vertices. Throws NotSplitError naming the first non-split layer.
SwitchingReport min_switching_partition(const TemporalGraph& g);

// The covering family of candidate separators from a temporal split
// partition with no switching vertices besides possibly the terminals:
// at most tau+1 sets, every minimal temporal (s,z)-separator among them.
// Throws InfeasibleError when s and z share a time-edge and
// std::invalid_argument when a non-terminal vertex switches.
std::vector<VertexSet> enumerate_separators_fixed_partition(const SeparationInstance& inst,
                                                            const TemporalSplitPartition& part);

// The candidate family the split solver searches for a given partition:
// the fixed-partition enumeration when nothing switches, otherwise a
// recursion over switching vertices. Every minimal temporal
// (s,z)-separator of the instance appears in the output.
std::vector<VertexSet> split_candidate_family(const SeparationInstance& inst,
                                              const TemporalSplitPartition& part);

// FPT search for a temporal (s,z)-separator of size <= k on a temporal
// split graph, parameterized by the lifetime and the number of switching
// vertices. Returns a minimum-size verified witness when one exists.
// Throws NotSplitError when a layer is not a split graph.
SolveResult solve_split_fpt(const SeparationInstance& inst);

// The p value solve_split_fpt runs with (switching vertices apart from the
// terminals under a minimum-switching partition); exposed for reporting.
int split_parameter(const TemporalGraph& g, Vertex s, Vertex z);

}  // namespace tempsep
