#include "tempsep/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tempsep/reachability.hpp"

namespace tempsep {

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 1);
    return Permutation{std::move(m)};
}

Permutation Permutation::make(std::vector<int> map) {
    const int n = static_cast<int>(map.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : map) {
        if (x < 1 || x > n || seen[x]) throw std::invalid_argument("not a permutation of 1..n");
        seen[x] = 1;
    }
    return Permutation{std::move(map)};
}

std::vector<int> Permutation::inverse() const {
    std::vector<int> inv(map.size() + 1, 0);
    for (int i = 1; i <= size(); ++i) inv[map[i - 1]] = i;
    return inv;
}

StaticGraph graph_from_permutation(const Permutation& p) {
    const int n = p.size();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v <= n; ++v)
        for (int w = v + 1; w <= n; ++w)
            if (p(w) < p(v)) edges.emplace_back(v, w);
    return StaticGraph::make(n, std::move(edges));
}

std::optional<Permutation> permutation_from_graph(const StaticGraph& g) {
    const int n = g.n;
    auto adj = g.adjacency_bits();

    // bottom[j] is the vertex at bottom position j+1. Vertex v goes exactly
    // left of its neighbors among 1..v-1, which therefore must occupy a
    // suffix of the row built so far.
    std::vector<int> bottom;
    bottom.reserve(n);
    for (Vertex v = 1; v <= n; ++v) {
        int smaller_neighbors = 0;
        for (Vertex w = 1; w < v; ++w)
            if (adj[v].test(w)) ++smaller_neighbors;
        int pos = static_cast<int>(bottom.size()) - smaller_neighbors;
        for (size_t j = pos; j < bottom.size(); ++j)
            if (!adj[v].test(bottom[j])) return std::nullopt;
        bottom.insert(bottom.begin() + pos, v);
    }

    std::vector<int> map(n);
    for (int j = 0; j < n; ++j) map[bottom[j] - 1] = j + 1;
    Permutation p{std::move(map)};
    if (graph_from_permutation(p) != g) return std::nullopt;
    return p;
}

TemporalPermutation recognize_temporal_permutation(const TemporalGraph& g) {
    TemporalPermutation tp;
    tp.reserve(g.tau);
    for (int t = 1; t <= g.tau; ++t) {
        auto p = permutation_from_graph(layer(g, t));
        if (!p) throw NotPermutationError(t);
        tp.push_back(std::move(*p));
    }
    return tp;
}

long long kendall_tau(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation length mismatch");
    const int n = p.size();
    // Discordant pairs are exactly the inversions of q composed with the
    // inverse of p; count them by merge sort.
    auto pinv = p.inverse();
    std::vector<int> seq(n);
    for (int pos = 1; pos <= n; ++pos) seq[pos - 1] = q(pinv[pos]);

    long long inversions = 0;
    std::vector<int> buf(n);
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo <= 1) return;
        int mid = (lo + hi) / 2;
        self(self, lo, mid);
        self(self, mid, hi);
        int i = lo, j = mid, out = lo;
        while (i < mid && j < hi) {
            if (seq[i] <= seq[j]) {
                buf[out++] = seq[i++];
            } else {
                inversions += mid - i;
                buf[out++] = seq[j++];
            }
        }
        while (i < mid) buf[out++] = seq[i++];
        while (j < hi) buf[out++] = seq[j++];
        std::copy(buf.begin() + lo, buf.begin() + hi, seq.begin() + lo);
    };
    rec(rec, 0, n);
    return inversions;
}

long long d_sigma(const TemporalPermutation& tp) {
    long long sum = 0;
    for (size_t t = 0; t + 1 < tp.size(); ++t) sum += kendall_tau(tp[t], tp[t + 1]);
    return sum;
}

VertexSet scanline_crossing_set(const Permutation& p, Scanline sl) {
    VertexSet out;
    for (Vertex v = 1; v <= p.size(); ++v)
        if ((v <= sl.top_gap) != (p(v) <= sl.bottom_gap)) out.push_back(v);
    return out;
}

std::vector<VertexSet> enumerate_scanline_separators(const Permutation& p, Vertex s, Vertex z,
                                                     int k) {
    if (s == z) throw std::invalid_argument("terminals must be distinct");
    const int n = p.size();
    auto pinv = p.inverse();
    std::set<VertexSet> out;

    std::vector<char> crossing(n + 1);
    for (int a = 0; a <= n; ++a) {
        // Sweep b upward; at b the vertex at bottom position b flips sides.
        int cnt = 0;
        for (Vertex v = 1; v <= n; ++v) {
            crossing[v] = v <= a;
            cnt += crossing[v];
        }
        for (int b = 0; b <= n; ++b) {
            if (b > 0) {
                Vertex u = pinv[b];
                crossing[u] ^= 1;
                cnt += crossing[u] ? 1 : -1;
            }
            bool s_left = s <= a && p(s) <= b;
            bool z_left = z <= a && p(z) <= b;
            bool s_right = s > a && p(s) > b;
            bool z_right = z > a && p(z) > b;
            bool separating = (s_left && z_right) || (z_left && s_right);
            if (!separating || cnt > k) continue;
            VertexSet sep;
            sep.reserve(cnt);
            for (Vertex v = 1; v <= n; ++v)
                if (crossing[v]) sep.push_back(v);
            out.insert(std::move(sep));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<VertexSet> new_scanline_separators(const Permutation& prev, const Permutation& cur,
                                               Vertex s, Vertex z, int k) {
    if (prev.size() != cur.size()) throw std::invalid_argument("permutation length mismatch");
    auto in_prev = enumerate_scanline_separators(prev, s, z, k);
    auto in_cur = enumerate_scanline_separators(cur, s, z, k);
    std::vector<VertexSet> out;
    std::set_difference(in_cur.begin(), in_cur.end(), in_prev.begin(), in_prev.end(),
                        std::back_inserter(out));
    return out;
}

namespace {

struct PermSearch {
    const SeparationInstance& inst;
    const std::vector<std::vector<VertexSet>>& seplist;
    int budget;
    // Smallest start index a state has been fully explored from.
    std::map<VertexSet, int> explored{};
    std::optional<VertexSet> witness{};

    std::optional<VertexSet> run() {
        VertexSet empty;
        if (rec(empty, 1)) return witness;
        return std::nullopt;
    }

    bool rec(const VertexSet& s, int i) {
        if (is_temporal_separator(inst, s)) {
            witness = s;
            return true;
        }
        auto it = explored.find(s);
        if (it != explored.end() && it->second <= i) return false;
        for (int j = i; j <= inst.graph.tau; ++j) {
            for (const VertexSet& cand : seplist[j]) {
                VertexSet u = set_union(s, cand);
                if (u.size() > s.size() && static_cast<int>(u.size()) <= budget) {
                    if (rec(u, j + 1)) return true;
                }
            }
        }
        if (it != explored.end())
            it->second = std::min(it->second, i);
        else
            explored.emplace(s, i);
        return false;
    }
};

}  // namespace

SolveResult solve_perm_fpt(const SeparationInstance& inst) {
    TemporalPermutation tp = recognize_temporal_permutation(inst.graph);
    if (inst.graph.has_edge_any_layer(inst.s, inst.z)) return solve_infeasible();

    // seplist[1] holds all scanline separators of layer 1; each later entry
    // only the sets novel relative to the previous layer.
    std::vector<std::vector<VertexSet>> seplist(inst.graph.tau + 1);
    if (inst.graph.tau >= 1)
        seplist[1] = enumerate_scanline_separators(tp[0], inst.s, inst.z, inst.k);
    for (int t = 2; t <= inst.graph.tau; ++t)
        seplist[t] = new_scanline_separators(tp[t - 2], tp[t - 1], inst.s, inst.z, inst.k);

    // Ascending budgets make the first hit a minimum-size witness.
    for (int budget = 0; budget <= inst.k; ++budget) {
        PermSearch search{inst, seplist, budget};
        if (auto w = search.run()) return solve_found(std::move(*w));
    }
    return solve_not_found();
}

}  // namespace tempsep
