#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mincut/algorithms.hpp"
#include "mincut/graph.hpp"

namespace mincut {

/// What counts as a successful trial.
///   survival        some leaf's bipartition equals the target cut
///   exact_value     the returned cut value equals lambda*
///   exact_partition the returned cut equals the target (up to complement)
enum class SuccessEvent { survival, exact_value, exact_partition };

std::string to_string(SuccessEvent e);
std::optional<SuccessEvent> event_from_string(std::string_view name);

/// Monte Carlo point estimate with a 3-sigma normal confidence interval.
struct SuccessEstimate {
    SuccessEvent event = SuccessEvent::survival;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Order-independent integer accumulators for one batch of trials; merging
/// partial sums in any order yields identical totals, which is what makes
/// the parallel harness reproducible.
struct TrialSums {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t surviving_children = 0;     // sum of top-level surviving children
    std::uint64_t surviving_children_sq = 0;  // sum of squares
    std::uint64_t recursive_calls = 0;
    std::uint64_t contractions = 0;

    TrialSums& operator+=(const TrialSums& o);
};

/// One seeded trial of `algo` against `g`: per-trial stream i is derived
/// from (seed, i) alone. Returns the per-trial success indicator and stats.
/// Exposed so the serial and parallel drivers share one kernel.
TrialSums run_trial(Algorithm algo, const ContractibleGraph& g,
                    const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                    SuccessEvent event, std::uint64_t seed, std::uint64_t trial,
                    int repetitions);

/// Serial reference driver.
TrialSums run_trials_serial(Algorithm algo, const ContractibleGraph& g,
                            const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                            SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                            int repetitions = 1);

/// OpenMP driver; bitwise-identical totals for any thread count.
TrialSums run_trials_parallel(Algorithm algo, const ContractibleGraph& g,
                              const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                              SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                              int threads = 0, int repetitions = 1);

/// Estimate the probability of `event` for `algo` on `g` against a target
/// minimum cut. The target is verified against the deterministic oracle
/// before any trial runs. `repetitions` applies to the karger tag.
SuccessEstimate estimate_success(Algorithm algo, const ContractibleGraph& g, const Cut& target,
                                 SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                                 int threads = 0, int repetitions = 1);

/// Sample mean with a 3-sigma interval.
struct MeanEstimate {
    std::uint64_t trials = 0;
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Mean number of root children in which the tracked cut survived its
/// spawning contraction. Only sound as a two-sided check on unit cycles,
/// where per-contraction survival is exactly p_n; other inputs are refused.
MeanEstimate surviving_children_stats(Algorithm algo, const ContractibleGraph& cycle,
                                      const Cut& target, std::uint64_t trials, std::uint64_t seed,
                                      int threads = 0);

enum class BenchFamily { cycle, dense };

std::string to_string(BenchFamily f);

/// One benchmark row: mean single-threaded wall time per run after warmup.
struct BenchRecord {
    int n = 0;
    Algorithm algorithm = Algorithm::fpz2;
    BenchFamily family = BenchFamily::dense;
    int repetitions = 0;
    double mean_seconds = 0.0;
    double mean_contractions = 0.0;
    double mean_calls = 0.0;

    /// T(n) / (n^2 ln n); flat across sizes when the expected-time bound holds.
    double ratio_n2logn() const;
};

/// Time `algorithms` on freshly generated graphs of each size. The first 5%
/// of repetitions (at least one when repetitions >= 2) are warmup and are
/// discarded. Runs single-threaded to keep timings contention-free.
std::vector<BenchRecord> bench_runtime(std::span<const Algorithm> algorithms,
                                       std::span<const int> sizes, int repetitions,
                                       std::uint64_t seed, BenchFamily family = BenchFamily::dense);

// CSV surfaces. Numbers are printed with enough digits to round-trip.
std::string estimate_csv_header();
std::string estimate_csv_row(const std::string& graph_label, Algorithm algo, int n,
                             const SuccessEstimate& est, double analytic_reference);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);

}  // namespace mincut
