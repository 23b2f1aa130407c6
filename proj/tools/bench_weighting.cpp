// Timing harness for the weighting solvers on random matrices.
// Usage: bench_weighting [max_n] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pcm/generators.hpp"
#include "pcm/weighting.hpp"

using namespace pcm;
using clock_type = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 12;
    int reps = argc > 2 ? std::atoi(argv[2]) : 200;
    if (max_n < 3 || reps < 1) {
        std::fprintf(stderr, "usage: bench_weighting [max_n >= 3] [reps >= 1]\n");
        return 2;
    }

    std::printf("%4s  %12s  %12s  %10s\n", "n", "eigen_us", "geomean_us", "iters");
    for (int n = 3; n <= max_n; ++n) {
        double eigen_us = 0.0, gm_us = 0.0;
        long long iters = 0;
        volatile double sink = 0.0;
        for (int r = 0; r < reps; ++r) {
            Pcm a = saaty_uniform(n, static_cast<std::uint64_t>(r) + 1);

            auto t0 = clock_type::now();
            EigenResult eig = right_eigenvector(a);
            auto t1 = clock_type::now();
            WeightVector gm = geometric_mean_weights(a);
            auto t2 = clock_type::now();

            eigen_us += std::chrono::duration<double, std::micro>(t1 - t0).count();
            gm_us += std::chrono::duration<double, std::micro>(t2 - t1).count();
            iters += eig.iterations;
            sink = sink + eig.lambda_max + gm[0];
        }
        std::printf("%4d  %12.2f  %12.2f  %10.1f\n", n, eigen_us / reps, gm_us / reps,
                    static_cast<double>(iters) / reps);
    }
    return 0;
}
