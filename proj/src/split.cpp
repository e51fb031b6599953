#include "tempsep/split.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "tempsep/reachability.hpp"
#include "tempsep/vertex_cover.hpp"

namespace tempsep {

namespace {

// All split partitions of g, given one valid base partition (C0, I0).
// Any split partition differs from the base by at most one vertex moved in
// each direction, because a clique and an independent set intersect in at
// most one vertex.
std::vector<std::pair<Bitset, Bitset>> partitions_from_base(const StaticGraph& g,
                                                            const VertexSet& c0,
                                                            const VertexSet& i0) {
    const int n = g.n;
    auto adj = g.adjacency_bits();
    Bitset cmask = Bitset::from_set(n + 1, c0);
    Bitset imask = Bitset::from_set(n + 1, i0);

    std::vector<Bitset> cliques;
    std::set<VertexSet> seen;
    auto push = [&](const Bitset& c) {
        if (seen.insert(c.to_set()).second) cliques.push_back(c);
    };

    push(cmask);
    VertexSet downs;  // clique vertices with no neighbor on the independent side
    for (Vertex x : c0) {
        if (!(adj[x] & imask).any()) {
            downs.push_back(x);
            Bitset c = cmask;
            c.reset(x);
            push(c);
        }
    }
    for (Vertex y : i0) {
        Bitset missing = cmask;
        missing.subtract(adj[y]);
        int mc = missing.count();
        if (mc == 0) {
            // y is adjacent to the whole base clique.
            Bitset c = cmask;
            c.set(y);
            push(c);
            for (Vertex x : c0) {
                Bitset rest = adj[x] & imask;
                rest.reset(y);
                if (!rest.any()) {
                    Bitset cs = cmask;
                    cs.reset(x);
                    cs.set(y);
                    push(cs);
                }
            }
        } else if (mc == 1) {
            Vertex x = missing.to_set()[0];
            Bitset rest = adj[x] & imask;
            rest.reset(y);
            if (!rest.any()) {
                Bitset cs = cmask;
                cs.reset(x);
                cs.set(y);
                push(cs);
            }
        }
    }

    Bitset full(n + 1);
    for (Vertex v = 1; v <= n; ++v) full.set(v);
    std::vector<std::pair<Bitset, Bitset>> out;
    out.reserve(cliques.size());
    for (const Bitset& c : cliques) {
        Bitset i = full;
        i.subtract(c);
        out.emplace_back(c, i);
    }
    return out;
}

}  // namespace

std::optional<SplitDecomposition> split_decompose(const StaticGraph& g) {
    const int n = g.n;
    if (n == 0) return SplitDecomposition{};

    auto deg = g.degrees();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });

    // Degree-sequence recognition: with d_1 >= ... >= d_n and
    // m = max{i : d_i >= i-1}, g is split iff
    // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[order[i - 1]] >= i - 1) m = i;
    long long top = 0, rest = 0;
    for (int i = 0; i < n; ++i) (i < m ? top : rest) += deg[order[i]];
    if (top != static_cast<long long>(m) * (m - 1) + rest) return std::nullopt;

    VertexSet c0(order.begin(), order.begin() + m);
    VertexSet i0(order.begin() + m, order.end());
    std::sort(c0.begin(), c0.end());
    std::sort(i0.begin(), i0.end());

    auto partitions = partitions_from_base(g, c0, i0);
    Bitset forced_c = partitions[0].first;
    Bitset forced_i = partitions[0].second;
    for (const auto& [c, i] : partitions) {
        forced_c &= c;
        forced_i &= i;
    }

    SplitDecomposition d;
    d.forced_clique = forced_c.to_set();
    d.forced_independent = forced_i.to_set();
    Bitset q(n + 1);
    for (Vertex v = 1; v <= n; ++v)
        if (!forced_c.test(v) && !forced_i.test(v)) q.set(v);
    d.flexible = q.to_set();

    if (d.flexible.empty()) {
        d.flexible_kind = FlexKind::Empty;
    } else {
        size_t present = 0;
        size_t total = d.flexible.size() * (d.flexible.size() - 1) / 2;
        for (size_t i = 0; i < d.flexible.size(); ++i)
            for (size_t j = i + 1; j < d.flexible.size(); ++j)
                if (g.has_edge(d.flexible[i], d.flexible[j])) ++present;
        if (present == total)
            d.flexible_kind = FlexKind::Clique;
        else if (present == 0)
            d.flexible_kind = FlexKind::Independent;
        else
            throw std::logic_error("flexible set is neither a clique nor independent");
    }
    return d;
}

std::vector<SplitPartition> all_split_partitions(const SplitDecomposition& d,
                                                 const StaticGraph& g) {
    VertexSet all(g.n);
    std::iota(all.begin(), all.end(), 1);

    std::vector<SplitPartition> out;
    if (d.flexible_kind == FlexKind::Empty) {
        out.push_back({set_difference(all, d.forced_independent), d.forced_independent});
        return out;
    }
    if (d.flexible_kind == FlexKind::Clique) {
        // Independent side ranges over forced_independent plus at most one
        // flexible vertex.
        out.push_back({set_difference(all, d.forced_independent), d.forced_independent});
        for (Vertex q : d.flexible) {
            VertexSet i = d.forced_independent;
            set_insert(i, q);
            out.push_back({set_difference(all, i), i});
        }
    } else {
        out.push_back({d.forced_clique, set_difference(all, d.forced_clique)});
        for (Vertex q : d.flexible) {
            VertexSet c = d.forced_clique;
            set_insert(c, q);
            out.push_back({c, set_difference(all, c)});
        }
    }
    return out;
}

VertexSet switching_vertices(const TemporalSplitPartition& part) {
    VertexSet in_c, in_i;
    for (const SplitPartition& p : part.layers) {
        in_c = set_union(in_c, p.clique);
        in_i = set_union(in_i, p.independent);
    }
    return set_intersection(in_c, in_i);
}

SwitchingReport min_switching_partition(const TemporalGraph& g) {
    const int n = g.n;
    const int tau = g.tau;
    SwitchingReport report;
    if (tau == 0) return report;

    struct LayerInfo {
        Bitset forced_c, forced_i, flexible;
        FlexKind kind;
        std::vector<Bitset> adj;
    };
    std::vector<LayerInfo> L(tau);
    for (int t = 0; t < tau; ++t) {
        StaticGraph gt = layer(g, t + 1);
        auto d = split_decompose(gt);
        if (!d) throw NotSplitError(t + 1);
        L[t] = {Bitset::from_set(n + 1, d->forced_clique),
                Bitset::from_set(n + 1, d->forced_independent),
                Bitset::from_set(n + 1, d->flexible), d->flexible_kind, gt.adjacency_bits()};
    }

    Bitset full(n + 1);
    for (Vertex v = 1; v <= n; ++v) full.set(v);

    // any_adj / all_adj over layers drive the auxiliary-graph edges.
    std::vector<Bitset> any_adj(n + 1, Bitset(n + 1)), all_adj(n + 1, full);
    for (Vertex v = 1; v <= n; ++v) all_adj[v].reset(v);
    for (int t = 0; t < tau; ++t)
        for (Vertex v = 1; v <= n; ++v) {
            any_adj[v] |= L[t].adj[v];
            all_adj[v] &= L[t].adj[v];
        }

    Bitset q_cap = L[0].flexible;
    for (int t = 1; t < tau; ++t) q_cap &= L[t].flexible;
    // c_tilde: always on the forced-clique-or-flexible side, not in q_cap;
    // i_tilde symmetrically.
    Bitset c_tilde = full, i_tilde = full;
    for (int t = 0; t < tau; ++t) {
        c_tilde &= L[t].forced_c | L[t].flexible;
        i_tilde &= L[t].forced_i | L[t].flexible;
    }
    c_tilde.subtract(q_cap);
    i_tilde.subtract(q_cap);

    auto build_aux = [&](const Bitset& verts, bool edge_if_missing_somewhere) {
        VertexSet ids = verts.to_set();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) {
                bool always = all_adj[ids[i]].test(ids[j]);
                bool ever = any_adj[ids[i]].test(ids[j]);
                bool e = edge_if_missing_somewhere ? !always : ever;
                if (e) edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
            }
        return std::pair{StaticGraph::make(static_cast<int>(ids.size()), std::move(edges)), ids};
    };

    std::optional<int> best_p;
    std::vector<std::pair<Bitset, Bitset>> best_layers;
    VertexSet q_choices = q_cap.to_set();

    auto try_choice = [&](Vertex qc, Vertex qi) {
        Bitset vac = c_tilde, vai = i_tilde;
        if (qc) vac.set(qc);
        if (qi) vai.set(qi);
        auto [ac, ac_ids] = build_aux(vac, true);
        auto [ai, ai_ids] = build_aux(vai, false);

        auto localize = [](const VertexSet& ids, Vertex v) -> VertexSet {
            if (!v) return {};
            auto it = std::lower_bound(ids.begin(), ids.end(), v);
            return {static_cast<int>(it - ids.begin()) + 1};
        };
        auto tc = min_vertex_cover(ac, localize(ac_ids, qc));
        auto ti = min_vertex_cover(ai, localize(ai_ids, qi));

        Bitset picked_c = vac, picked_i = vai;
        for (Vertex lv : *tc) picked_c.reset(ac_ids[lv - 1]);
        for (Vertex lv : *ti) picked_i.reset(ai_ids[lv - 1]);

        std::vector<std::pair<Bitset, Bitset>> layers(tau);
        for (int t = 0; t < tau; ++t) {
            Bitset cm, im;
            if (L[t].kind == FlexKind::Empty) {
                cm = L[t].forced_c;
                im = full;
                im.subtract(cm);
            } else if (L[t].kind == FlexKind::Clique) {
                im = L[t].forced_i | picked_i;
                cm = full;
                cm.subtract(im);
            } else {
                cm = L[t].forced_c | picked_c;
                im = full;
                im.subtract(cm);
            }
            // Validate; an invalid choice is skipped rather than returned.
            bool ok = true;
            cm.for_each([&](int v) {
                Bitset need = cm;
                need.reset(v);
                if (!need.is_subset_of(L[t].adj[v])) ok = false;
            });
            im.for_each([&](int v) {
                if ((L[t].adj[v] & im).any()) ok = false;
            });
            if (!ok) return;
            layers[t] = {cm, im};
        }
        Bitset in_c(n + 1), in_i(n + 1);
        for (auto& [cm, im] : layers) {
            in_c |= cm;
            in_i |= im;
        }
        int p = (in_c & in_i).count();
        if (!best_p || p < *best_p) {
            best_p = p;
            best_layers = layers;
        }
    };

    try_choice(0, 0);
    for (Vertex qi : q_choices) try_choice(0, qi);
    for (Vertex qc : q_choices) {
        try_choice(qc, 0);
        for (Vertex qi : q_choices)
            if (qi != qc) try_choice(qc, qi);
    }

    if (!best_p) throw std::logic_error("no valid temporal split partition candidate");
    report.p = *best_p;
    report.partition.layers.reserve(tau);
    for (auto& [cm, im] : best_layers)
        report.partition.layers.push_back({cm.to_set(), im.to_set()});
    report.switching = switching_vertices(report.partition);
    return report;
}

namespace {

// The family from the fixed-partition enumeration; preconditions already
// checked by the caller. tau == 0 yields the single empty candidate.
std::vector<VertexSet> fixed_partition_family(const TemporalGraph& g, Vertex a, Vertex b,
                                     const TemporalSplitPartition& part) {
    const int tau = g.tau;
    if (tau == 0) return {VertexSet{}};

    VertexSet terminals = make_set({a, b});
    VertexSet clique_side = set_difference(part.layers[0].clique, terminals);

    // T: vertices forming length-2 temporal a-b paths. They sit in every
    // separator.
    std::vector<int> first_a(g.n + 1, kUnreached), last_b(g.n + 1, kUnreached);
    for (const TimeEdge& e : g.edges) {
        Vertex other = 0;
        if (e.u == a) other = e.v;
        if (e.v == a) other = e.u;
        if (other && (first_a[other] == kUnreached || e.t < first_a[other])) first_a[other] = e.t;
        other = 0;
        if (e.u == b) other = e.v;
        if (e.v == b) other = e.u;
        if (other && e.t > last_b[other]) last_b[other] = e.t;
    }
    VertexSet core;
    for (Vertex v = 1; v <= g.n; ++v)
        if (v != a && v != b && first_a[v] != kUnreached && last_b[v] != kUnreached &&
            first_a[v] <= last_b[v])
            core.push_back(v);

    auto clique_neighbors = [&](Vertex x, int t) {
        VertexSet out;
        for (const TimeEdge& e : g.layer_edges(t)) {
            if (e.u == x && set_contains(clique_side, e.v)) out.push_back(e.v);
            if (e.v == x && set_contains(clique_side, e.u)) out.push_back(e.u);
        }
        return make_set(std::move(out));
    };

    std::vector<VertexSet> pre(tau + 1), suf(tau + 2);
    for (int t = 1; t <= tau; ++t) pre[t] = set_union(pre[t - 1], clique_neighbors(a, t));
    for (int t = tau; t >= 1; --t) suf[t] = set_union(suf[t + 1], clique_neighbors(b, t));

    std::vector<VertexSet> family;
    std::set<VertexSet> seen;
    for (int i = 0; i <= tau; ++i) {
        VertexSet cand = set_union(set_union(pre[i], suf[i + 1]), core);
        if (seen.insert(cand).second) family.push_back(std::move(cand));
    }
    return family;
}

TemporalSplitPartition part_remove(const TemporalSplitPartition& part, const VertexSet& x) {
    TemporalSplitPartition out;
    out.layers.reserve(part.layers.size());
    for (const SplitPartition& p : part.layers)
        out.layers.push_back({set_difference(p.clique, x), set_difference(p.independent, x)});
    return out;
}

TemporalSplitPartition part_slice(const TemporalSplitPartition& part, int a, int b) {
    TemporalSplitPartition out;
    if (a > b) return out;
    out.layers.assign(part.layers.begin() + (a - 1), part.layers.begin() + b);
    return out;
}

// Recursive enumeration of the covering candidate family. Every minimal
// temporal (a,b)-separator of g appears in the output.
std::vector<VertexSet> candidate_family(const TemporalGraph& g, Vertex a, Vertex b,
                                        const TemporalSplitPartition& part) {
    if (g.has_edge_any_layer(a, b)) return {};
    VertexSet sw = set_difference(switching_vertices(part), make_set({a, b}));
    if (sw.empty()) return fixed_partition_family(g, a, b, part);

    const Vertex v = sw.front();
    const VertexSet vset{v};
    auto base = candidate_family(remove_vertices(g, vset), a, b, part_remove(part, vset));

    std::vector<VertexSet> generated;
    for (const VertexSet& bs : base) generated.push_back(set_union(bs, vset));

    TemporalGraph g_no_b = remove_vertices(g, {b});
    TemporalGraph g_no_a = remove_vertices(g, {a});
    TemporalSplitPartition part_no_b = part_remove(part, {b});
    TemporalSplitPartition part_no_a = part_remove(part, {a});
    for (int t = 0; t <= g.tau; ++t) {
        auto left = candidate_family(restrict_layers(g_no_b, 1, t), a, v,
                                     part_slice(part_no_b, 1, t));
        auto right = candidate_family(restrict_layers(g_no_a, t + 1, g.tau), v, b,
                                      part_slice(part_no_a, t + 1, g.tau));
        for (const VertexSet& bs : base)
            for (const VertexSet& lx : left)
                for (const VertexSet& rx : right)
                    generated.push_back(set_union(bs, set_union(lx, rx)));
    }

    // Candidate-count ceiling (tau+1)^{3^p (p+1)}, evaluated while small
    // enough to fit a long double.
    const auto p = sw.size();
    if (p <= 2) {
        long double bound =
            std::pow(static_cast<long double>(g.tau + 1), std::pow(3.0L, p) * (p + 1));
        if (static_cast<long double>(generated.size()) > bound)
            throw std::logic_error("candidate family exceeds its size bound");
    }

    std::vector<VertexSet> out;
    std::set<VertexSet> seen;
    for (VertexSet& c : generated)
        if (seen.insert(c).second) out.push_back(std::move(c));
    return out;
}

}  // namespace

std::vector<VertexSet> enumerate_separators_fixed_partition(const SeparationInstance& inst,
                                                            const TemporalSplitPartition& part) {
    const TemporalGraph& g = inst.graph;
    if (part.tau() != g.tau)
        throw std::invalid_argument("partition has wrong number of layers");
    for (const SplitPartition& p : part.layers) {
        if (static_cast<int>(p.clique.size() + p.independent.size()) != g.n ||
            !set_intersection(p.clique, p.independent).empty())
            throw std::invalid_argument("layer partition does not cover the vertex set");
    }
    VertexSet sw = set_difference(switching_vertices(part), make_set({inst.s, inst.z}));
    if (!sw.empty())
        throw std::invalid_argument("partition has a switching vertex besides the terminals");
    if (g.has_edge_any_layer(inst.s, inst.z))
        throw InfeasibleError("terminals share a time-edge");
    return fixed_partition_family(g, inst.s, inst.z, part);
}

std::vector<VertexSet> split_candidate_family(const SeparationInstance& inst,
                                              const TemporalSplitPartition& part) {
    return candidate_family(inst.graph, inst.s, inst.z, part);
}

SolveResult solve_split_fpt(const SeparationInstance& inst) {
    SwitchingReport rep = min_switching_partition(inst.graph);
    if (inst.graph.has_edge_any_layer(inst.s, inst.z)) return solve_infeasible();

    auto family = candidate_family(inst.graph, inst.s, inst.z, rep.partition);
    std::optional<VertexSet> best;
    for (const VertexSet& cand : family) {
        if (static_cast<int>(cand.size()) > inst.k) continue;
        if (!is_temporal_separator(inst, cand)) continue;
        if (!best || size_lex_less(cand, *best)) best = cand;
    }
    if (best) return solve_found(std::move(*best));
    return solve_not_found();
}

int split_parameter(const TemporalGraph& g, Vertex s, Vertex z) {
    SwitchingReport rep = min_switching_partition(g);
    return static_cast<int>(set_difference(rep.switching, make_set({s, z})).size());
}

}  // namespace tempsep
