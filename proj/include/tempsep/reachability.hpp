#pragma once

#include <optional>
#include <vector>

#include "tempsep/temporal_graph.hpp"

namespace tempsep {

inline constexpr int kUnreached = -1;

// Earliest arrival times of non-strict temporal walks from s.
// Result is indexed by vertex id (slot 0 unused); s maps to 0 so a time-edge
// labeled 1 out of s is usable; unreachable vertices map to kUnreached.
// Within a layer the reachable set closes under connected components, since
// non-strict walks may take any number of same-label hops.
std::vector<int> earliest_arrival(const TemporalGraph& g, Vertex s);

// True iff removing sep destroys all temporal s-z paths.
// Throws std::invalid_argument if sep contains s or z (separators exclude
// the terminals by definition) or vertices outside 1..n.
bool is_temporal_separator(const SeparationInstance& inst, const VertexSet& sep);

// A witness walk from s to z if one exists. The walk is not necessarily a
// simple path; reachability by walks equals reachability by paths.
std::optional<TemporalWalk> find_temporal_path(const TemporalGraph& g, Vertex s, Vertex z);

// Replays a walk against the graph: membership of every step, non-decreasing
// labels, chained endpoints from `from` to `to`.
bool is_valid_walk(const TemporalGraph& g, const TemporalWalk& walk, Vertex from, Vertex to);

}  // namespace tempsep
