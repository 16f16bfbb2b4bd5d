// Timing comparison of the serial sample loop against the OpenMP-parallel
// one on a representative catalog subset, plus a quadrature micro-bench.

#include <chrono>
#include <cstdio>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "hyperverify/identities.hpp"
#include "hyperverify/quadrature.hpp"

namespace hv = hyperverify;

namespace {

double run_subset(int parallelism) {
    const char* ids[] = {"laplace_pFp", "jump_general", "sigma2_repr",
                         "theorem41", "inequalities"};
    hv::run_config cfg;
    cfg.seed = 42;
    cfg.parallelism = parallelism;
    const auto t0 = std::chrono::steady_clock::now();
    for (const char* id : ids) {
        const auto* c = hv::find_case(id);
        hv::run_case(*c, cfg);
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double quad_bench() {
    const auto t0 = std::chrono::steady_clock::now();
    double sink = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        sink += hv::integrate_finite(
            [](double x) { return std::pow(x, -0.5) * std::cos(x); }, 0.0,
            1.0, 1e-12, 1e-14, -0.5);
    }
    const auto t1 = std::chrono::steady_clock::now();
    (void)sink;
    return std::chrono::duration<double>(t1 - t0).count() / 200.0;
}

}  // namespace

int main() {
    int threads = 1;
#if defined(_OPENMP)
    threads = omp_get_max_threads();
#endif
    std::printf("singular-endpoint quadrature: %.3f ms per integral\n",
                1e3 * quad_bench());

    const double serial = run_subset(1);
    std::printf("catalog subset, serial reference:   %7.2f s\n", serial);
    if (threads > 1) {
        const double parallel = run_subset(threads);
        std::printf("catalog subset, %2d OpenMP threads:  %7.2f s  (x%.2f)\n",
                    threads, parallel, serial / parallel);
    } else {
        std::printf("OpenMP not available; serial path only\n");
    }
    return 0;
}
