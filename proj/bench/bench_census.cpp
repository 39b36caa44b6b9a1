// Times the parallel census sweep against the serial reference and checks
// that both produce the same report. Usage: bench_census [n ...], default 4 5.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rbott/census.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_run(rbott::CensusReport (*fn)(int, const rbott::CheckSelection&, const rbott::CensusOptions&), int n,
                const rbott::CheckSelection& checks, const rbott::CensusOptions& opts, rbott::CensusReport& out) {
    const auto start = Clock::now();
    out = fn(n, checks, opts);
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> dims;
    for (int a = 1; a < argc; ++a) dims.push_back(std::atoi(argv[a]));
    if (dims.empty()) dims = {4, 5};

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%3s %12s %12s %12s %9s %6s\n", "n", "matrices", "serial[s]", "parallel[s]", "speedup", "equal");

    const rbott::CheckSelection checks = rbott::CheckSelection::all();
    bool all_equal = true;
    for (int n : dims) {
        rbott::CensusOptions serial_opts;
        serial_opts.parallel = false;
        serial_opts.force_large = true;
        rbott::CensusOptions parallel_opts;
        parallel_opts.force_large = true;

        rbott::CensusReport serial_report, parallel_report;
        const double ts = time_run(rbott::run_census_serial, n, checks, serial_opts, serial_report);
        const double tp = time_run(rbott::run_census, n, checks, parallel_opts, parallel_report);
        const bool equal = serial_report == parallel_report;
        all_equal = all_equal && equal;
        std::printf("%3d %12llu %12.3f %12.3f %8.2fx %6s\n", n,
                    static_cast<unsigned long long>(rbott::census_size(n)), ts, tp, ts / tp,
                    equal ? "yes" : "NO");
    }
    return all_equal ? 0 : 1;
}
