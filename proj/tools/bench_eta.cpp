// Timing comparison between the serial reference eta table, the cached
// serial kernel, and the OpenMP kernel, plus the full free-triple sweep
// serial vs parallel.
//
//   mckay-bench [max_r]        (default max_r = 25)

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "mckay/eta.hpp"
#include "mckay/group_data.hpp"
#include "mckay/sweep.hpp"

using namespace mckay;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GroupData sample_group(unsigned r) {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.n = 3;
    spec.r = r;
    spec.weights = {1, 2, static_cast<long>(r) - 3};
    return GroupData::build_cyclic(spec);
}

}  // namespace

int main(int argc, char** argv) {
    unsigned max_r = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 25;
    std::cout << "threads available: " << omp_get_max_threads() << "\n\n";

    // small groups: kernel against the definitional reference
    for (unsigned r : {7u, 11u, 13u}) {
        GroupData g = sample_group(r);

        auto t0 = std::chrono::steady_clock::now();
        RationalMatrix ref = eta_table(g);
        double t_ref = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        RationalMatrix kernel = eta_table_kernel(g, false);
        double t_kernel = seconds_since(t0);

        const bool ok = ref == kernel;
        std::cout << "eta table " << g.name() << ": reference " << t_ref << " s, kernel "
                  << t_kernel << " s" << (ok ? "" : "  MISMATCH") << "\n";
        if (!ok) return 1;
    }

    // larger groups: serial kernel vs OpenMP kernel
    for (unsigned r : {23u, 29u, 31u}) {
        GroupData g = sample_group(r);

        auto t0 = std::chrono::steady_clock::now();
        RationalMatrix serial = eta_table_kernel(g, false);
        double t_serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        RationalMatrix parallel = eta_table_kernel(g, true);
        double t_parallel = seconds_since(t0);

        const bool ok = serial == parallel;
        std::cout << "eta table " << g.name() << ": kernel " << t_serial
                  << " s, kernel+omp " << t_parallel << " s" << (ok ? "" : "  MISMATCH")
                  << "\n";
        if (!ok) return 1;
    }

    std::cout << "\nfree-triple sweep up to r = " << max_r << "\n";
    SweepSummary serial = run_free_triple_sweep(max_r, false);
    std::cout << "  serial:   " << serial.elapsed_seconds << " s ("
              << serial.multisets_checked << " groups, "
              << (serial.all_ok ? "all ok" : "FAILURES") << ")\n";
    SweepSummary parallel = run_free_triple_sweep(max_r, true);
    std::cout << "  parallel: " << parallel.elapsed_seconds << " s ("
              << parallel.multisets_checked << " groups, "
              << (parallel.all_ok ? "all ok" : "FAILURES") << ")\n";
    return serial.all_ok && parallel.all_ok ? 0 : 1;
}
