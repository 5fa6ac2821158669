// Wall-clock comparison of the serial reference kernels against their
// OpenMP-parallel counterparts.  Build and run:
//
//     cmake --build build --target bench_kernels
//     ./build/bench/bench_kernels [--quick]
//
// Results are identical across policies by construction (each kernel sorts
// its findings into a policy-independent order); the point of the table is
// the speedup column.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include <omp.h>

#include "oddwheel/search.hpp"
#include "oddwheel/sweeps.hpp"

using namespace oddwheel;
using Clock = std::chrono::steady_clock;

namespace {

// Runs the kernel under both policies and prints one table row.  The kernel
// returns its case count so the table can show problem size.
void row(const std::string& name,
         const std::function<unsigned long long(ExecutionPolicy)>& kernel) {
    auto start = Clock::now();
    unsigned long long cases = kernel(ExecutionPolicy::serial);
    double serial = std::chrono::duration<double>(Clock::now() - start).count();

    start = Clock::now();
    kernel(ExecutionPolicy::parallel);
    double parallel = std::chrono::duration<double>(Clock::now() - start).count();

    std::printf("%-38s %12llu %10.3fs %10.3fs %8.2fx\n", name.c_str(), cases,
                serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    }

    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-38s %12s %11s %11s %9s\n", "kernel", "cases", "serial",
                "parallel", "speedup");

    {
        int bound = quick ? 49 : 99;
        row("odd_characteristic_sweep(" + std::to_string(bound) + ")",
            [&](ExecutionPolicy p) {
                return odd_characteristic_sweep(bound, p).cases_checked;
            });
    }
    {
        int bound = quick ? 25 : 49;
        row("class_shortcut_sweep(" + std::to_string(bound) + ")",
            [&](ExecutionPolicy p) {
                return class_shortcut_sweep(bound, p).cases_checked;
            });
    }
    {
        int max_len = quick ? 5 : 7;
        row("odd_wheel_sweep({3,5}, " + std::to_string(max_len) + ")",
            [&](ExecutionPolicy p) {
                return odd_wheel_sweep({3, 5}, max_len, p).cases_checked;
            });
    }
    {
        int max_len = quick ? 7 : 9;
        row("search_wheels(n=5, max=" + std::to_string(max_len) + ")",
            [&](ExecutionPolicy p) {
                SearchParams params;
                params.n = 5;
                params.max_len = max_len;
                params.policy = p;
                return search_wheels(params, [](const SearchEvent&) {})
                    .units_processed;
            });
    }
    return 0;
}
