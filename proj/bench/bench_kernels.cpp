// Wall-clock comparison of the serial reference paths (jobs=1) against the
// OpenMP paths (jobs=0 -> all hardware threads) for the parallel kernels:
// per-dimension homology, per-vertex link certification, multi-seed
// reduction, and t-subset design verification.

#include <chrono>
#include <cstdio>
#include <functional>

#include "rp4/constructions.hpp"
#include "rp4/designs.hpp"
#include "rp4/flips.hpp"
#include "rp4/homology.hpp"
#include "rp4/manifold.hpp"
#include "rp4/par.hpp"

using namespace rp4;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& f) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, const std::function<void(int)>& kernel) {
    double serial = run_ms([&] { kernel(1); });
    double parallel = run_ms([&] { kernel(0); });
    std::printf("%-38s %10.1f ms %10.1f ms %8.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    auto c1 = c1_pipeline();
    auto kuehnel = kuehnel_rp(4);
    auto k6 = build_k6();
    auto w22 = witt22(k6);

    std::printf("threads available: %d\n", effective_jobs(0));
    std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    row("homology(kuehnel_rp(4))", [&](int jobs) { homology(kuehnel, jobs); });

    row("homology(s4_32)", [&](int jobs) { homology(c1.s4_32, jobs); });

    row("manifold check rp4 (16 links)", [&](int jobs) {
        SphereCheckOptions opts;
        opts.jobs = jobs;
        opts.reduce.seed = 1;
        check_combinatorial_manifold(c1.rp4, opts);
    });

    row("manifold check s4_32 (32 links)", [&](int jobs) {
        SphereCheckOptions opts;
        opts.jobs = jobs;
        opts.reduce.seed = 1;
        check_combinatorial_manifold(c1.s4_32, opts);
    });

    row("reduce link, 8 restarts", [&](int jobs) {
        ReduceOptions opts;
        opts.seed = 1;
        opts.restarts = 8;
        opts.jobs = jobs;
        reduce(link(c1.rp4, Simplex{1}), opts);
    });

    row("verify witt22 x200", [&](int jobs) {
        for (int i = 0; i < 200; ++i) verify_design(w22, 3, 22, 6, 1, jobs);
    });

    return 0;
}
