#pragma once

#include <utility>
#include <vector>

#include "tempsep/util.hpp"

namespace tempsep {

// Simple undirected graph on vertices 1..n.
// Edges are stored canonically: u < v, sorted ascending, no duplicates.
struct StaticGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    // Canonicalizes edge pairs and validates endpoints; throws std::invalid_argument.
    static StaticGraph make(int n, std::vector<std::pair<Vertex, Vertex>> es);

    bool has_edge(Vertex u, Vertex v) const;
    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<int> degrees() const;
    std::vector<Bitset> adjacency_bits() const;

    bool operator==(const StaticGraph&) const = default;
};

}  // namespace tempsep
