#include "tempsep/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempsep {

namespace {

bool edge_less(const TimeEdge& a, const TimeEdge& b) {
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
}

std::vector<int> build_offsets(int tau, const std::vector<TimeEdge>& edges) {
    std::vector<int> off(tau + 2, 0);
    for (const TimeEdge& e : edges) ++off[e.t + 1];
    for (int t = 1; t <= tau + 1; ++t) off[t] += off[t - 1];
    return off;
}

}  // namespace

TemporalGraph TemporalGraph::make(int n, int tau, std::vector<TimeEdge> es) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (tau < 0) throw std::invalid_argument("lifetime must be non-negative");
    for (TimeEdge& e : es) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw std::invalid_argument("time-edge endpoint out of range 1.." + std::to_string(n));
        if (e.t < 1 || e.t > tau)
            throw std::invalid_argument("time label " + std::to_string(e.t) + " out of range 1.." +
                                        std::to_string(tau));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(es.begin(), es.end(), edge_less);
    es.erase(std::unique(es.begin(), es.end()), es.end());
    TemporalGraph g;
    g.n = n;
    g.tau = tau;
    g.edges = std::move(es);
    g.layer_offsets_ = build_offsets(tau, g.edges);
    return g;
}

std::span<const TimeEdge> TemporalGraph::layer_edges(int t) const {
    if (t < 1 || t > tau) return {};
    return {edges.data() + layer_offsets_[t], edges.data() + layer_offsets_[t + 1]};
}

bool TemporalGraph::has_edge_any_layer(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    for (const TimeEdge& e : edges)
        if (e.u == u && e.v == v) return true;
    return false;
}

StaticGraph layer(const TemporalGraph& g, int t) {
    if (t < 1 || t > g.tau)
        throw std::out_of_range("layer " + std::to_string(t) + " out of range 1.." +
                                std::to_string(g.tau));
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const TimeEdge& e : g.layer_edges(t)) es.emplace_back(e.u, e.v);
    return StaticGraph::make(g.n, std::move(es));
}

StaticGraph underlying_graph(const TemporalGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> es;
    es.reserve(g.edges.size());
    for (const TimeEdge& e : g.edges) es.emplace_back(e.u, e.v);
    return StaticGraph::make(g.n, std::move(es));
}

TemporalGraph remove_vertices(const TemporalGraph& g, const VertexSet& x) {
    TemporalGraph out;
    out.n = g.n;
    out.tau = g.tau;
    out.edges.reserve(g.edges.size());
    for (const TimeEdge& e : g.edges)
        if (!set_contains(x, e.u) && !set_contains(x, e.v)) out.edges.push_back(e);
    out.layer_offsets_ = build_offsets(out.tau, out.edges);
    return out;
}

TemporalGraph restrict_layers(const TemporalGraph& g, int a, int b) {
    if (a > b) return TemporalGraph::make(g.n, 0, {});
    if (a < 1 || b > g.tau) throw std::out_of_range("layer window out of range");
    std::vector<TimeEdge> es;
    for (const TimeEdge& e : g.edges)
        if (e.t >= a && e.t <= b) es.push_back({e.u, e.v, e.t - a + 1});
    return TemporalGraph::make(g.n, b - a + 1, std::move(es));
}

SeparationInstance SeparationInstance::make(TemporalGraph g, Vertex s, Vertex z, int k) {
    if (s == z) throw std::invalid_argument("terminals must be distinct");
    if (s < 1 || s > g.n || z < 1 || z > g.n)
        throw std::invalid_argument("terminal out of range 1.." + std::to_string(g.n));
    if (k < 0 || k > g.n - 2)
        throw std::invalid_argument("budget must be between 0 and n-2");
    return SeparationInstance{std::move(g), s, z, k};
}

}  // namespace tempsep
