#include "tempsep/reachability.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempsep {

namespace {

// Shared layer-by-layer sweep. When parents are requested, every newly
// reached vertex records the time-edge it was reached through, so a walk
// can be reconstructed with non-decreasing labels.
struct Sweep {
    std::vector<int> arrival;
    std::vector<Vertex> parent;
    std::vector<int> parent_time;
};

Sweep run_sweep(const TemporalGraph& g, Vertex s, bool want_parents) {
    Sweep sw;
    sw.arrival.assign(g.n + 1, kUnreached);
    if (want_parents) {
        sw.parent.assign(g.n + 1, 0);
        sw.parent_time.assign(g.n + 1, 0);
    }
    if (s < 1 || s > g.n) throw std::invalid_argument("source out of range");
    sw.arrival[s] = 0;

    std::vector<std::vector<Vertex>> adj(g.n + 1);
    std::vector<Vertex> touched;
    std::vector<Vertex> queue;
    for (int t = 1; t <= g.tau; ++t) {
        auto span = g.layer_edges(t);
        if (span.empty()) continue;
        touched.clear();
        for (const TimeEdge& e : span) {
            if (adj[e.u].empty()) touched.push_back(e.u);
            if (adj[e.v].empty()) touched.push_back(e.v);
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        // BFS inside the layer starting from everything already reached.
        queue.clear();
        for (Vertex v : touched)
            if (sw.arrival[v] != kUnreached) queue.push_back(v);
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : adj[v]) {
                if (sw.arrival[w] != kUnreached) continue;
                sw.arrival[w] = t;
                if (want_parents) {
                    sw.parent[w] = v;
                    sw.parent_time[w] = t;
                }
                queue.push_back(w);
            }
        }
        for (Vertex v : touched) adj[v].clear();
    }
    return sw;
}

}  // namespace

std::vector<int> earliest_arrival(const TemporalGraph& g, Vertex s) {
    return run_sweep(g, s, false).arrival;
}

bool is_temporal_separator(const SeparationInstance& inst, const VertexSet& sep) {
    for (Vertex v : sep) {
        if (v == inst.s || v == inst.z)
            throw std::invalid_argument("separator must not contain a terminal");
        if (v < 1 || v > inst.graph.n)
            throw std::invalid_argument("separator vertex out of range");
    }
    auto arrival = earliest_arrival(remove_vertices(inst.graph, sep), inst.s);
    return arrival[inst.z] == kUnreached;
}

std::optional<TemporalWalk> find_temporal_path(const TemporalGraph& g, Vertex s, Vertex z) {
    if (s == z) throw std::invalid_argument("terminals must be distinct");
    Sweep sw = run_sweep(g, s, true);
    if (sw.arrival[z] == kUnreached) return std::nullopt;
    TemporalWalk walk;
    for (Vertex v = z; v != s; v = sw.parent[v])
        walk.push_back({sw.parent[v], v, sw.parent_time[v]});
    std::reverse(walk.begin(), walk.end());
    return walk;
}

bool is_valid_walk(const TemporalGraph& g, const TemporalWalk& walk, Vertex from, Vertex to) {
    if (walk.empty()) return from == to;
    Vertex at = from;
    int last_t = 0;
    for (const WalkStep& step : walk) {
        if (step.from != at) return false;
        if (step.t < last_t) return false;
        Vertex u = std::min(step.from, step.to);
        Vertex v = std::max(step.from, step.to);
        auto span = g.layer_edges(step.t);
        bool found = std::any_of(span.begin(), span.end(),
                                 [&](const TimeEdge& e) { return e.u == u && e.v == v; });
        if (!found) return false;
        at = step.to;
        last_t = step.t;
    }
    return at == to;
}

}  // namespace tempsep
