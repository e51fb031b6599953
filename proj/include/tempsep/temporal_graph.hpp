#pragma once

#include <span>
#include <vector>

#include "tempsep/static_graph.hpp"
#include "tempsep/util.hpp"

namespace tempsep {

// An undirected edge available at time t. Canonical storage keeps u < v.
struct TimeEdge {
    Vertex u = 0;
    Vertex v = 0;
    int t = 0;

    bool operator==(const TimeEdge&) const = default;
};

// Temporal graph: fixed vertex set 1..n, lifetime tau, a set of time-edges.
// Edges are kept sorted by (t, u, v) and deduplicated so per-layer edge
// ranges are contiguous.
struct TemporalGraph {
    int n = 0;
    int tau = 0;
    std::vector<TimeEdge> edges;

    // Canonicalizes and validates; throws std::invalid_argument on bad input.
    static TemporalGraph make(int n, int tau, std::vector<TimeEdge> es);

    std::span<const TimeEdge> layer_edges(int t) const;
    bool has_edge_any_layer(Vertex u, Vertex v) const;

    bool operator==(const TemporalGraph&) const = default;

private:
    std::vector<int> layer_offsets_;  // size tau+2; layer t spans [off[t], off[t+1])
    friend TemporalGraph remove_vertices(const TemporalGraph&, const VertexSet&);
};

// Static graph of the edges labeled t (1 <= t <= tau); throws std::out_of_range.
StaticGraph layer(const TemporalGraph& g, int t);

// Union of all layers.
StaticGraph underlying_graph(const TemporalGraph& g);

// g minus x: time-edges incident to x are dropped, vertex ids are kept.
TemporalGraph remove_vertices(const TemporalGraph& g, const VertexSet& x);

// Keeps time-edges with a <= t <= b, re-based to labels starting at 1.
// a > b yields the empty graph with tau = 0.
TemporalGraph restrict_layers(const TemporalGraph& g, int a, int b);

// An instance of the separation problem: find a vertex set of size at most k,
// avoiding s and z, whose removal destroys all temporal s-z paths.
struct SeparationInstance {
    TemporalGraph graph;
    Vertex s = 0;
    Vertex z = 0;
    int k = 0;

    static SeparationInstance make(TemporalGraph g, Vertex s, Vertex z, int k);
};

// One hop of a temporal walk.
struct WalkStep {
    Vertex from = 0;
    Vertex to = 0;
    int t = 0;

    bool operator==(const WalkStep&) const = default;
};

// Non-strict temporal walk: labels are non-decreasing, consecutive steps
// share the intermediate vertex, every step is a time-edge of the host graph.
using TemporalWalk = std::vector<WalkStep>;

}  // namespace tempsep
