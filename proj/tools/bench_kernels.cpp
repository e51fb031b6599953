// Compares the OpenMP oracle kernels against their serial reference
// implementations on generated instances and prints timings plus a
// result-equality column.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tempsep/brute_force.hpp"
#include "tempsep/random_instances.hpp"
#include "tempsep/reductions.hpp"

using namespace tempsep;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 0;
    for (int r = 0; r < reps; ++r) {
        auto start = Clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (r == 0 || ms < best) best = ms;
    }
    return best;
}

void row(const std::string& kernel, const std::string& instance, double serial_ms,
         double omp_ms, bool match) {
    std::printf("%-28s %-26s %10.2f %10.2f %8.2fx   %s\n", kernel.c_str(), instance.c_str(),
                serial_ms, omp_ms, omp_ms > 0 ? serial_ms / omp_ms : 0.0,
                match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    OracleCaps caps;
    caps.max_n = 20;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-28s %-26s %10s %10s %9s   %s\n", "kernel", "instance", "serial_ms", "omp_ms",
                "speedup", "check");

    {
        // A no-instance forces the full subset scan on both sides.
        StaticGraph c5 = StaticGraph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
        auto inst = vc_to_temporal_split(c5, 1);  // C5 has no cover of size 1
        std::optional<VertexSet> a, b;
        double s = time_ms([&] { a = min_separator_bruteforce_serial(inst, caps); }, reps);
        double p = time_ms([&] { b = min_separator_bruteforce(inst, caps); }, reps);
        row("min_separator", "cover gadget n=17 tau=4", s, p, a == b);
    }
    {
        Rng rng(11);
        auto g = random_temporal_permutation_graph(13, 4, 2, rng);
        std::vector<VertexSet> a, b;
        double s = time_ms([&] { a = all_minimal_separators_bruteforce_serial(g, 1, 13, caps); },
                           reps);
        double p = time_ms([&] { b = all_minimal_separators_bruteforce(g, 1, 13, caps); }, reps);
        row("all_minimal_separators", "random perm n=13 tau=4", s, p, a == b);
    }
    {
        // Switching oracle on a cover gadget: many layers, few partitions
        // each, so the partition product carries the work.
        StaticGraph g = StaticGraph::make(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5},
                                              {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {1, 6}});
        auto tg = vc_to_min_switching(g);
        int a = 0, b = 0;
        double s = time_ms([&] { a = min_switching_bruteforce_serial(tg, caps); }, reps);
        double p = time_ms([&] { b = min_switching_bruteforce(tg, caps); }, reps);
        row("min_switching", "cover gadget n=12 tau=13", s, p, a == b);
    }
    {
        Rng rng(23);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 1; u <= 18; ++u)
            for (Vertex v = u + 1; v <= 18; ++v)
                if (rng.chance(0.35)) edges.emplace_back(u, v);
        StaticGraph g = StaticGraph::make(18, std::move(edges));
        VertexSet a, b;
        double s = time_ms([&] { a = min_vertex_cover_bruteforce_serial(g, caps); }, reps);
        double p = time_ms([&] { b = min_vertex_cover_bruteforce(g, caps); }, reps);
        row("min_vertex_cover", "random static n=18", s, p, a == b);
    }
    return 0;
}
