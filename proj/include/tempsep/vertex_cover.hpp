#pragma once

#include <optional>

#include "tempsep/errors.hpp"
#include "tempsep/static_graph.hpp"

namespace tempsep {

// True iff every edge of g has an endpoint in x.
bool is_vertex_cover(const StaticGraph& g, const VertexSet& x);

// A minimum-cardinality vertex cover disjoint from `excluded`, computed by a
// bounded search tree. Among all minimum covers the lexicographically
// smallest one is returned. Throws CoverInfeasibleError when two excluded
// vertices share an edge. With a budget, returns nullopt when the minimum
// exceeds it.
std::optional<VertexSet> min_vertex_cover(const StaticGraph& g, const VertexSet& excluded = {},
                                          std::optional<int> budget = std::nullopt);

}  // namespace tempsep
