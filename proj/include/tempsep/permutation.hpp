#pragma once

#include <optional>
#include <vector>

#include "tempsep/errors.hpp"
#include "tempsep/solve.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// A permutation of 1..n in sequence form: map[i-1] = pi(i).
struct Permutation {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[i - 1]; }

    static Permutation identity(int n);
    // Validates bijectivity; throws std::invalid_argument.
    static Permutation make(std::vector<int> map);
    std::vector<int> inverse() const;  // inverse()[p] = vertex at bottom position p

    bool operator==(const Permutation&) const = default;
};

using TemporalPermutation = std::vector<Permutation>;

// Inversion graph: edge {v,w} for v < w iff pi(w) < pi(v).
StaticGraph graph_from_permutation(const Permutation& p);

// The unique permutation whose inversion graph is g, or nullopt. Builds the
// bottom row by inserting vertices in ascending order immediately left of
// their smaller neighbors, then verifies the result.
std::optional<Permutation> permutation_from_graph(const StaticGraph& g);

// Per-layer recognition; throws NotPermutationError naming the first
// offending layer.
TemporalPermutation recognize_temporal_permutation(const TemporalGraph& g);

// Number of pairs ordered differently by p and q (bubble-sort distance).
long long kendall_tau(const Permutation& p, const Permutation& q);

// Sum of Kendall tau distances between consecutive layers.
long long d_sigma(const TemporalPermutation& tp);

// A scanline runs between the gap after the a-th top point and the gap
// after the b-th bottom point of the matching diagram.
struct Scanline {
    int top_gap = 0;
    int bottom_gap = 0;
};

// Vertices whose segments cross the scanline: (v <= a) xor (pi(v) <= b).
VertexSet scanline_crossing_set(const Permutation& p, Scanline sl);

// All distinct crossing sets of scanlines strictly separating s and z,
// filtered to size <= k. Sorted lexicographically. Contains every minimal
// (s,z)-separator of size <= k of the layer; at most (n-1)(2k+3) sets.
std::vector<VertexSet> enumerate_scanline_separators(const Permutation& p, Vertex s, Vertex z,
                                                     int k);

// Scanline separators of cur that are not scanline separators of prev;
// at most kendall_tau(prev, cur) * (2k+1) sets.
std::vector<VertexSet> new_scanline_separators(const Permutation& prev, const Permutation& cur,
                                               Vertex s, Vertex z, int k);

// FPT search on a temporal permutation graph, parameterized by the sum of
// consecutive Kendall tau distances and the budget. Returns a minimum-size
// verified witness when one exists. Throws NotPermutationError when a layer
// is not a permutation graph.
SolveResult solve_perm_fpt(const SeparationInstance& inst);

}  // namespace tempsep
