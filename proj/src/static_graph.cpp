#include "tempsep/static_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempsep {

StaticGraph StaticGraph::make(int n, std::vector<std::pair<Vertex, Vertex>> es) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : es) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    StaticGraph g;
    g.n = n;
    g.edges = std::move(es);
    return g;
}

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::pair{u, v});
}

std::vector<std::vector<Vertex>> StaticGraph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> StaticGraph::degrees() const {
    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<Bitset> StaticGraph::adjacency_bits() const {
    std::vector<Bitset> adj(n + 1, Bitset(n + 1));
    for (auto [u, v] : edges) {
        adj[u].set(v);
        adj[v].set(u);
    }
    return adj;
}

}  // namespace tempsep
