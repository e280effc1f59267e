// Compares the serial reference kernels against their OpenMP versions:
// pairwise unit-disk construction and fixed-size subset scanning.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liardom/enumeration.hpp"
#include "liardom/generate.hpp"
#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"
#include "liardom/solvers.hpp"

using namespace liardom;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   results %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s, same ? "match" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        const auto pts = gen_points(12000, 4000, 7);
        const double t0 = now();
        const auto es = udg_edges_serial(pts);
        const double t1 = now();
        const auto ep = udg_edges_parallel(pts);
        const double t2 = now();
        report("udg pairwise construction", t1 - t0, t2 - t1, es == ep);
        std::printf("  %zu points, %zu disk edges\n", pts.size(), es.size());
    }

    {
        // infeasibly small k so the scan covers the whole C(n,k) space
        const auto pts = gen_points(40, 60, 11);
        const SimpleGraph g = to_graph(build_udg(pts));
        const int k = 7;
        SolveOptions serial{UINT64_MAX, false}, parallel{UINT64_MAX, true};
        SolveStats s1, s2;
        const double t0 = now();
        const bool none_serial = prove_no_solution_of_size(Problem::lds, g, k, serial, &s1);
        const double t1 = now();
        const bool none_parallel = prove_no_solution_of_size(Problem::lds, g, k, parallel, &s2);
        const double t2 = now();
        report("fixed-size lds scan", t1 - t0, t2 - t1, none_serial == none_parallel);
        std::printf("  n=%d k=%d, %llu subsets, no solution: %s\n", g.vertex_count(), k,
                    static_cast<unsigned long long>(binom(g.vertex_count(), k)),
                    none_serial ? "yes" : "no");
    }

    {
        // dense enough to be feasible; ascending search tops out at size 13
        const auto pts = gen_points(26, 14, 5);
        const SimpleGraph g = to_graph(build_udg(pts));
        SolveOptions serial{UINT64_MAX, false}, parallel{UINT64_MAX, true};
        const double t0 = now();
        const SolveResult rs = brute_force_minimum(Problem::lds, g, serial);
        const double t1 = now();
        const SolveResult rp = brute_force_minimum(Problem::lds, g, parallel);
        const double t2 = now();
        report("ascending brute force", t1 - t0, t2 - t1,
               rs.size == rp.size && rs.solution == rp.solution);
        std::printf("  n=%d, minimum %d\n", g.vertex_count(), rs.size);
    }
    return 0;
}
