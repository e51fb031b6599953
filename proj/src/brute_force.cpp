#include "tempsep/brute_force.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tempsep/reachability.hpp"

namespace tempsep {

namespace {

void check_n_cap(int n, const OracleCaps& caps, const char* what) {
    if (n > caps.max_n)
        throw CapExceededError(std::string(what) + ": n = " + std::to_string(n) +
                               " exceeds the oracle cap " + std::to_string(caps.max_n));
    if (caps.max_n > 62)
        throw CapExceededError("oracle caps beyond 62 vertices are not supported");
}

// Word-sized temporal reachability for subset scans: one adjacency mask per
// vertex per layer, rebuilt once per instance and shared by every query.
struct MaskReach {
    int n = 0, tau = 0;
    Vertex s = 0, z = 0;
    std::vector<uint64_t> adj;  // adj[(t-1) * (n+1) + v]

    explicit MaskReach(const TemporalGraph& g, Vertex s_, Vertex z_)
        : n(g.n), tau(g.tau), s(s_), z(z_), adj(static_cast<size_t>(g.tau) * (g.n + 1), 0) {
        for (const TimeEdge& e : g.edges) {
            adj[static_cast<size_t>(e.t - 1) * (n + 1) + e.u] |= uint64_t{1} << e.v;
            adj[static_cast<size_t>(e.t - 1) * (n + 1) + e.v] |= uint64_t{1} << e.u;
        }
    }

    // True iff removing `removed` leaves z unreachable from s.
    bool separates(uint64_t removed) const {
        uint64_t reach = uint64_t{1} << s;
        uint64_t frontier = reach;
        for (int t = 0; t < tau; ++t) {
            const uint64_t* layer = adj.data() + static_cast<size_t>(t) * (n + 1);
            frontier = reach;
            while (frontier) {
                uint64_t grow = 0;
                uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    grow |= layer[v];
                }
                frontier = grow & ~removed & ~reach;
                reach |= frontier;
            }
            if (reach & (uint64_t{1} << z)) return false;
        }
        return true;
    }
};

uint64_t indices_to_mask(const std::vector<int>& idx, const VertexSet& candidates) {
    uint64_t m = 0;
    for (int i : idx) m |= uint64_t{1} << candidates[i];
    return m;
}

VertexSet mask_to_set(uint64_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Lexicographic order on the ascending vertex lists of two equal-size masks:
// the mask owning the lowest differing bit is the smaller set.
bool mask_lex_less(uint64_t a, uint64_t b) {
    uint64_t d = a ^ b;
    if (!d) return false;
    return a & (d & (~d + 1));
}

// Ascending-size, lexicographic-within-size enumeration over index vectors.
template <typename Fn>
void for_each_combination(int total, int size, Fn fn) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return;
        int i = size - 1;
        while (i >= 0 && idx[i] == total - size + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<VertexSet> min_separator_bruteforce_serial(const SeparationInstance& inst,
                                                         OracleCaps caps) {
    check_n_cap(inst.graph.n, caps, "min_separator_bruteforce");
    VertexSet candidates;
    for (Vertex v = 1; v <= inst.graph.n; ++v)
        if (v != inst.s && v != inst.z) candidates.push_back(v);
    const int total = static_cast<int>(candidates.size());
    for (int size = 0; size <= std::min(inst.k, total); ++size) {
        std::optional<VertexSet> hit;
        for_each_combination(total, size, [&](const std::vector<int>& idx) {
            VertexSet sep;
            sep.reserve(size);
            for (int i : idx) sep.push_back(candidates[i]);
            if (is_temporal_separator(inst, sep)) {
                hit = std::move(sep);
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

std::optional<VertexSet> min_separator_bruteforce(const SeparationInstance& inst,
                                                  OracleCaps caps) {
    check_n_cap(inst.graph.n, caps, "min_separator_bruteforce");
    MaskReach reach(inst.graph, inst.s, inst.z);
    VertexSet candidates;
    for (Vertex v = 1; v <= inst.graph.n; ++v)
        if (v != inst.s && v != inst.z) candidates.push_back(v);
    const int total = static_cast<int>(candidates.size());
    const uint64_t limit = uint64_t{1} << total;

    std::optional<uint64_t> best_mask;
    int best_size = inst.k + 1;
#pragma omp parallel
    {
        std::optional<uint64_t> local_best;
        int local_size = inst.k + 1;
#pragma omp for schedule(static) nowait
        for (long long m = 0; m < static_cast<long long>(limit); ++m) {
            int size = std::popcount(static_cast<uint64_t>(m));
            if (size > inst.k) continue;
            uint64_t removed = 0;
            uint64_t bits = static_cast<uint64_t>(m);
            while (bits) {
                removed |= uint64_t{1} << candidates[std::countr_zero(bits)];
                bits &= bits - 1;
            }
            if (!reach.separates(removed)) continue;
            if (!local_best || size < local_size ||
                (size == local_size && mask_lex_less(removed, *local_best))) {
                local_size = size;
                local_best = removed;
            }
        }
#pragma omp critical
        {
            if (local_best &&
                (!best_mask || local_size < best_size ||
                 (local_size == best_size && mask_lex_less(*local_best, *best_mask)))) {
                best_mask = local_best;
                best_size = local_size;
            }
        }
    }
    if (!best_mask) return std::nullopt;
    return mask_to_set(*best_mask);
}

std::vector<VertexSet> all_minimal_separators_bruteforce_serial(const TemporalGraph& g, Vertex s,
                                                                Vertex z, OracleCaps caps) {
    check_n_cap(g.n, caps, "all_minimal_separators_bruteforce");
    SeparationInstance inst = SeparationInstance::make(g, s, z, std::max(0, g.n - 2));
    VertexSet candidates;
    for (Vertex v = 1; v <= g.n; ++v)
        if (v != s && v != z) candidates.push_back(v);
    const int total = static_cast<int>(candidates.size());

    std::vector<VertexSet> out;
    for (uint64_t m = 0; m < (uint64_t{1} << total); ++m) {
        VertexSet sep;
        uint64_t bits = m;
        while (bits) {
            sep.push_back(candidates[std::countr_zero(bits)]);
            bits &= bits - 1;
        }
        if (!is_temporal_separator(inst, sep)) continue;
        bool minimal = true;
        for (size_t i = 0; i < sep.size() && minimal; ++i) {
            VertexSet smaller = sep;
            smaller.erase(smaller.begin() + i);
            if (is_temporal_separator(inst, smaller)) minimal = false;
        }
        if (minimal) out.push_back(std::move(sep));
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<VertexSet> all_minimal_separators_bruteforce(const TemporalGraph& g, Vertex s,
                                                         Vertex z, OracleCaps caps) {
    check_n_cap(g.n, caps, "all_minimal_separators_bruteforce");
    MaskReach reach(g, s, z);
    VertexSet candidates;
    for (Vertex v = 1; v <= g.n; ++v)
        if (v != s && v != z) candidates.push_back(v);
    const int total = static_cast<int>(candidates.size());
    const uint64_t limit = uint64_t{1} << total;

    std::vector<VertexSet> out;
#pragma omp parallel
    {
        std::vector<VertexSet> local;
#pragma omp for schedule(static) nowait
        for (long long m = 0; m < static_cast<long long>(limit); ++m) {
            uint64_t removed = 0;
            uint64_t bits = static_cast<uint64_t>(m);
            while (bits) {
                removed |= uint64_t{1} << candidates[std::countr_zero(bits)];
                bits &= bits - 1;
            }
            if (!reach.separates(removed)) continue;
            bool minimal = true;
            uint64_t members = removed;
            while (members && minimal) {
                uint64_t low = members & (~members + 1);
                if (reach.separates(removed & ~low)) minimal = false;
                members &= members - 1;
            }
            if (minimal) local.push_back(mask_to_set(removed));
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<SplitPartition> all_split_partitions_bruteforce(const StaticGraph& g,
                                                            OracleCaps caps) {
    check_n_cap(g.n, caps, "all_split_partitions_bruteforce");
    const int n = g.n;
    std::vector<uint64_t> adj(n + 1, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= uint64_t{1} << v;
        adj[v] |= uint64_t{1} << u;
    }
    std::vector<SplitPartition> out;
    const uint64_t full = ((uint64_t{1} << n) - 1) << 1;
    for (uint64_t c = 0; c < (uint64_t{1} << n); ++c) {
        uint64_t cm = c << 1;
        uint64_t im = full & ~cm;
        bool ok = true;
        for (uint64_t bits = cm; bits && ok; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            if ((cm & ~(uint64_t{1} << v) & ~adj[v]) != 0) ok = false;  // clique test
        }
        for (uint64_t bits = im; bits && ok; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            if ((im & adj[v]) != 0) ok = false;  // independence test
        }
        if (ok) out.push_back({mask_to_set(cm), mask_to_set(im)});
    }
    return out;
}

namespace {

int switching_count(const std::vector<int>& pick,
                    const std::vector<std::vector<std::pair<uint64_t, uint64_t>>>& layers) {
    uint64_t in_c = 0, in_i = 0;
    for (size_t t = 0; t < layers.size(); ++t) {
        in_c |= layers[t][pick[t]].first;
        in_i |= layers[t][pick[t]].second;
    }
    return std::popcount(in_c & in_i);
}

}  // namespace

int min_switching_bruteforce_serial(const TemporalGraph& g, OracleCaps caps) {
    check_n_cap(g.n, caps, "min_switching_bruteforce");
    if (g.tau == 0) return 0;
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> layers(g.tau);
    long long product = 1;
    for (int t = 1; t <= g.tau; ++t) {
        auto parts = all_split_partitions_bruteforce(layer(g, t), caps);
        if (parts.empty()) throw NotSplitError(t);
        for (const SplitPartition& p : parts) {
            uint64_t cm = 0, im = 0;
            for (Vertex v : p.clique) cm |= uint64_t{1} << v;
            for (Vertex v : p.independent) im |= uint64_t{1} << v;
            layers[t - 1].emplace_back(cm, im);
        }
        product *= static_cast<long long>(parts.size());
        if (product > caps.max_partition_product)
            throw CapExceededError("partition product exceeds the oracle cap");
    }
    int best = g.n + 1;
    std::vector<int> pick(g.tau, 0);
    for (;;) {
        best = std::min(best, switching_count(pick, layers));
        int t = 0;
        while (t < g.tau && ++pick[t] == static_cast<int>(layers[t].size())) pick[t++] = 0;
        if (t == g.tau) break;
    }
    return best;
}

int min_switching_bruteforce(const TemporalGraph& g, OracleCaps caps) {
    check_n_cap(g.n, caps, "min_switching_bruteforce");
    if (g.tau == 0) return 0;
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> layers(g.tau);
    long long product = 1;
    for (int t = 1; t <= g.tau; ++t) {
        auto parts = all_split_partitions_bruteforce(layer(g, t), caps);
        if (parts.empty()) throw NotSplitError(t);
        for (const SplitPartition& p : parts) {
            uint64_t cm = 0, im = 0;
            for (Vertex v : p.clique) cm |= uint64_t{1} << v;
            for (Vertex v : p.independent) im |= uint64_t{1} << v;
            layers[t - 1].emplace_back(cm, im);
        }
        product *= static_cast<long long>(parts.size());
        if (product > caps.max_partition_product)
            throw CapExceededError("partition product exceeds the oracle cap");
    }
    int best = g.n + 1;
#pragma omp parallel
    {
        long long lo = 0, hi = product;
#ifdef _OPENMP
        long long nth = omp_get_num_threads();
        long long chunk = (product + nth - 1) / nth;
        lo = std::min<long long>(product, omp_get_thread_num() * chunk);
        hi = std::min<long long>(product, lo + chunk);
#endif
        // Decode the chunk start once, then advance odometer-style.
        std::vector<int> pick(g.tau);
        long long rest = lo;
        for (int t = 0; t < g.tau; ++t) {
            pick[t] = static_cast<int>(rest % layers[t].size());
            rest /= static_cast<long long>(layers[t].size());
        }
        int local = g.n + 1;
        for (long long flat = lo; flat < hi; ++flat) {
            local = std::min(local, switching_count(pick, layers));
            int t = 0;
            while (t < g.tau && ++pick[t] == static_cast<int>(layers[t].size())) pick[t++] = 0;
        }
#pragma omp critical
        best = std::min(best, local);
    }
    return best;
}

VertexSet min_vertex_cover_bruteforce_serial(const StaticGraph& g, OracleCaps caps) {
    check_n_cap(g.n, caps, "min_vertex_cover_bruteforce");
    std::vector<uint64_t> need;
    for (auto [u, v] : g.edges) need.push_back((uint64_t{1} << u) | (uint64_t{1} << v));
    VertexSet vertices;
    for (Vertex v = 1; v <= g.n; ++v) vertices.push_back(v);
    for (int size = 0; size <= g.n; ++size) {
        VertexSet hit;
        bool found = false;
        for_each_combination(g.n, size, [&](const std::vector<int>& idx) {
            uint64_t mask = indices_to_mask(idx, vertices);
            for (uint64_t e : need)
                if (!(e & mask)) return true;
            hit = mask_to_set(mask);
            found = true;
            return false;
        });
        if (found) return hit;
    }
    return vertices;
}

VertexSet min_vertex_cover_bruteforce(const StaticGraph& g, OracleCaps caps) {
    check_n_cap(g.n, caps, "min_vertex_cover_bruteforce");
    std::vector<uint64_t> need;
    for (auto [u, v] : g.edges) need.push_back((uint64_t{1} << u) | (uint64_t{1} << v));
    const uint64_t limit = uint64_t{1} << g.n;

    std::optional<uint64_t> best;
    int best_size = g.n + 1;
#pragma omp parallel
    {
        std::optional<uint64_t> local;
        int local_size = g.n + 1;
#pragma omp for schedule(static) nowait
        for (long long m = 0; m < static_cast<long long>(limit); ++m) {
            uint64_t mask = static_cast<uint64_t>(m) << 1;
            int size = std::popcount(mask);
            if (size > local_size) continue;
            bool covers = true;
            for (uint64_t e : need)
                if (!(e & mask)) {
                    covers = false;
                    break;
                }
            if (!covers) continue;
            if (!local || size < local_size ||
                (size == local_size && mask_lex_less(mask, *local))) {
                local_size = size;
                local = mask;
            }
        }
#pragma omp critical
        {
            if (local && (!best || local_size < best_size ||
                          (local_size == best_size && mask_lex_less(*local, *best)))) {
                best = local;
                best_size = local_size;
            }
        }
    }
    return best ? mask_to_set(*best) : VertexSet{};
}

}  // namespace tempsep
