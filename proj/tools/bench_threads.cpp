// Compares the serial reference trial driver against the OpenMP one on the
// same workload and verifies the totals agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mincut/generate.hpp"
#include "mincut/montecarlo.hpp"

using namespace mincut;

namespace {

double time_run(const char* label, int threads, const ContractibleGraph& g,
                const std::vector<VertexId>& target, std::uint64_t trials, std::uint64_t seed,
                TrialSums& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = threads == 0
              ? run_trials_serial(Algorithm::fpz1, g, target, 2, SuccessEvent::survival, trials, seed)
              : run_trials_parallel(Algorithm::fpz1, g, target, 2, SuccessEvent::survival, trials,
                                    seed, threads);
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-10s %8.3f s   successes %llu\n", label, dt,
                static_cast<unsigned long long>(out.successes));
    return dt;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 32;
    const std::uint64_t trials = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 50000;
    const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

    const ContractibleGraph g = make_cycle(n);
    const std::vector<VertexId> target{0, 1};

    std::printf("fpz1 survival trials on C_%d, %llu trials, seed %llu\n", n,
                static_cast<unsigned long long>(trials), static_cast<unsigned long long>(seed));

    TrialSums serial, parallel;
    const double t_serial = time_run("serial", 0, g, target, trials, seed, serial);
#ifdef _OPENMP
    const int team = omp_get_max_threads();
#else
    const int team = 1;
#endif
    const double t_parallel = time_run("parallel", team, g, target, trials, seed, parallel);

    if (serial.successes != parallel.successes || serial.contractions != parallel.contractions) {
        std::printf("MISMATCH between serial and parallel totals\n");
        return 1;
    }
    std::printf("speedup with %d threads: %.2fx\n", team, t_serial / t_parallel);
    return 0;
}
