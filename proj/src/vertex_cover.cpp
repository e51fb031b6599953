#include "tempsep/vertex_cover.hpp"

#include <limits>

namespace tempsep {

bool is_vertex_cover(const StaticGraph& g, const VertexSet& x) {
    for (auto [u, v] : g.edges)
        if (!set_contains(x, u) && !set_contains(x, v)) return false;
    return true;
}

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

struct VcSolver {
    int n;
    std::vector<Bitset> adj;

    int degree(const Bitset& active, Vertex v) const { return (adj[v] & active).count(); }

    // Minimum cover size of the subgraph induced by `active`.
    int min_size(Bitset active) const {
        // Degree-1 rule: taking the neighbor is always at least as good.
        for (;;) {
            bool applied = false;
            for (Vertex v = 1; v <= n; ++v) {
                if (!active.test(v)) continue;
                Bitset nb = adj[v] & active;
                int d = nb.count();
                if (d == 0) {
                    active.reset(v);
                } else if (d == 1) {
                    int u = nb.to_set()[0];
                    active.reset(v);
                    active.reset(u);
                    applied = true;
                    return 1 + min_size(active);
                }
            }
            if (!applied) break;
        }
        // Branch on a maximum-degree vertex: either it is in the cover or
        // its whole neighborhood is.
        Vertex best = 0;
        int best_deg = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (!active.test(v)) continue;
            int d = degree(active, v);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        if (best_deg == 0) return 0;
        Bitset take = active;
        take.reset(best);
        int with_v = 1 + min_size(take);
        Bitset nbrs = adj[best] & active;
        Bitset drop = active;
        drop.reset(best);
        drop.subtract(nbrs);
        int without_v = nbrs.count() + min_size(drop);
        return std::min(with_v, without_v);
    }

    // Minimum cover size with `in` forced into the cover and `out` kept out.
    // Edges inside `out` make the constraints infeasible.
    int constrained_size(const Bitset& in, const Bitset& out) const {
        Bitset forced = in;
        for (Vertex v = 1; v <= n; ++v) {
            if (!out.test(v)) continue;
            Bitset nb = adj[v];
            if (nb.intersects(out)) return kInfeasible;
            forced |= nb;
        }
        if (forced.intersects(out)) return kInfeasible;
        Bitset active(n + 1);
        for (Vertex v = 1; v <= n; ++v) active.set(v);
        active.subtract(forced);
        active.subtract(out);
        return forced.count() + min_size(active);
    }
};

}  // namespace

std::optional<VertexSet> min_vertex_cover(const StaticGraph& g, const VertexSet& excluded,
                                          std::optional<int> budget) {
    for (Vertex v : excluded)
        if (v < 1 || v > g.n) throw std::invalid_argument("excluded vertex out of range");
    for (auto [u, v] : g.edges)
        if (set_contains(excluded, u) && set_contains(excluded, v))
            throw CoverInfeasibleError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} joins two excluded vertices");

    VcSolver solver{g.n, g.adjacency_bits()};
    Bitset in(g.n + 1);
    Bitset out = Bitset::from_set(g.n + 1, excluded);
    int target = solver.constrained_size(in, out);
    if (budget && target > *budget) return std::nullopt;

    // Fix vertices in ascending order; including the smallest possible
    // vertices first yields the lexicographically smallest minimum cover.
    for (Vertex v = 1; v <= g.n; ++v) {
        if (out.test(v) || in.test(v)) continue;
        Bitset with_v = in;
        with_v.set(v);
        if (solver.constrained_size(with_v, out) == target) {
            in = with_v;
        } else {
            out.set(v);
        }
    }
    VertexSet cover = in.to_set();
    return cover;
}

}  // namespace tempsep
