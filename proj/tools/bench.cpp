// Compares the OpenMP kernels against their serial references on identical
// inputs. Results must agree exactly; timings show what threading buys.

#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "hilbmatch/matcher.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::fprintf(stderr, "usage: %s [--quick]\n", argv[0]);
            return 2;
        }
    }

    std::printf("threads: %d\n\n", threads());
    int rc = 0;

    {
        const long long p_max = quick ? 10 : 36;
        const long long r_max = quick ? 300 : 2500;
        const long long xyz_max = quick ? 6 : 10;
        std::printf("coincidence-system scan: p<=%lld r<=%lld xyz<=%lld\n", p_max, r_max,
                    xyz_max);

        double t0 = now();
        const auto serial = hilbmatch::serial::solve_cy4_system(p_max, r_max, xyz_max);
        double t1 = now();
        const auto parallel = hilbmatch::solve_cy4_system(p_max, r_max, xyz_max);
        double t2 = now();

        const bool equal = serial == parallel;
        std::printf("  serial  %8.3fs  (%zu solutions)\n", t1 - t0, serial.size());
        std::printf("  openmp  %8.3fs  (%zu solutions)  speedup %.2fx  results %s\n", t2 - t1,
                    parallel.size(), (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0,
                    equal ? "identical" : "DIFFER");
        if (!equal) rc = 1;
    }

    {
        const long long m_hi = quick ? 300 : 1500;
        const long long p_hi = quick ? 12 : 24;
        const long long k_hi = quick ? 120 : 560;
        std::printf("\npolynomial matching: enriques m<=%lld vs blownup-plane p<=%lld k<=%lld\n",
                    m_hi, p_hi, k_hi);

        const auto left =
            hilbmatch::enumerate_family({hilbmatch::Family::EnriquesFm, {{"m", 1, m_hi}}});
        const auto right = hilbmatch::enumerate_family(
            {hilbmatch::Family::BlownUpPlane, {{"p", 3, p_hi}, {"k", 1, k_hi}}});
        std::printf("  sides: %zu x %zu families\n", left.size(), right.size());

        double t0 = now();
        const auto naive = hilbmatch::serial::find_matches(left, right);
        double t1 = now();
        const auto bucketed = hilbmatch::match_enumerated(left, right);
        double t2 = now();

        const bool equal = naive == bucketed;
        std::printf("  naive serial      %8.3fs  (%zu matches)\n", t1 - t0, naive.size());
        std::printf("  bucketed openmp   %8.3fs  (%zu matches)  speedup %.2fx  results %s\n",
                    t2 - t1, bucketed.size(), (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0,
                    equal ? "identical" : "DIFFER");
        if (!equal) rc = 1;
    }

    return rc;
}
