#include "mincut/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mincut/generate.hpp"
#include "mincut/oracle.hpp"

namespace mincut {

std::string to_string(SuccessEvent e) {
    switch (e) {
        case SuccessEvent::survival: return "survival";
        case SuccessEvent::exact_value: return "exact_value";
        case SuccessEvent::exact_partition: return "exact_partition";
    }
    return "?";
}

std::optional<SuccessEvent> event_from_string(std::string_view name) {
    if (name == "survival") return SuccessEvent::survival;
    if (name == "exact_value" || name == "exact-value") return SuccessEvent::exact_value;
    if (name == "exact_partition" || name == "exact-partition") return SuccessEvent::exact_partition;
    return std::nullopt;
}

TrialSums& TrialSums::operator+=(const TrialSums& o) {
    trials += o.trials;
    successes += o.successes;
    surviving_children += o.surviving_children;
    surviving_children_sq += o.surviving_children_sq;
    recursive_calls += o.recursive_calls;
    contractions += o.contractions;
    return *this;
}

TrialSums run_trial(Algorithm algo, const ContractibleGraph& g,
                    const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                    SuccessEvent event, std::uint64_t seed, std::uint64_t trial,
                    int repetitions) {
    RandomSource rng = RandomSource(seed).stream(trial);
    RunStats stats;
    RunConfig cfg;
    cfg.stats = &stats;
    cfg.target_side = target_side.empty() ? nullptr : &target_side;
    const Cut cut = run_algorithm(algo, g, rng, cfg, repetitions);

    bool success = false;
    switch (event) {
        case SuccessEvent::survival: success = stats.survival_leaves > 0; break;
        case SuccessEvent::exact_value: success = cut.value == lambda_star; break;
        case SuccessEvent::exact_partition:
            success = same_partition(cut.side, target_side, g.original_size());
            break;
    }

    TrialSums sums;
    sums.trials = 1;
    sums.successes = success ? 1 : 0;
    sums.surviving_children = stats.top_level_surviving_children;
    sums.surviving_children_sq =
        stats.top_level_surviving_children * stats.top_level_surviving_children;
    sums.recursive_calls = stats.recursive_calls;
    sums.contractions = stats.contractions;
    return sums;
}

TrialSums run_trials_serial(Algorithm algo, const ContractibleGraph& g,
                            const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                            SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                            int repetitions) {
    TrialSums total;
    for (std::uint64_t i = 0; i < trials; ++i)
        total += run_trial(algo, g, target_side, lambda_star, event, seed, i, repetitions);
    return total;
}

TrialSums run_trials_parallel(Algorithm algo, const ContractibleGraph& g,
                              const std::vector<VertexId>& target_side, std::uint64_t lambda_star,
                              SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                              int threads, int repetitions) {
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
    std::vector<TrialSums> partial(static_cast<std::size_t>(team));
#pragma omp parallel num_threads(team)
    {
        const int me = omp_get_thread_num();
        TrialSums local;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i)
            local += run_trial(algo, g, target_side, lambda_star, event, seed,
                               static_cast<std::uint64_t>(i), repetitions);
        partial[static_cast<std::size_t>(me)] = local;
    }
    TrialSums total;
    for (const auto& p : partial) total += p;  // ordered merge; sums commute anyway
    return total;
#else
    (void)threads;
    return run_trials_serial(algo, g, target_side, lambda_star, event, trials, seed, repetitions);
#endif
}

namespace {

void check_target_is_minimum(const ContractibleGraph& g, const Cut& target) {
    const std::uint64_t actual = cut_value(g, target.side);
    if (actual != target.value)
        throw InvalidArgument("target cut value does not match its side");
    const Cut oracle = deterministic_min_cut(g);
    if (oracle.value != target.value)
        throw InvalidArgument("target is not a minimum cut (oracle disagrees)");
}

SuccessEstimate finish_estimate(SuccessEvent event, const TrialSums& sums) {
    SuccessEstimate est;
    est.event = event;
    est.trials = sums.trials;
    est.successes = sums.successes;
    est.point = static_cast<double>(sums.successes) / static_cast<double>(sums.trials);
    const double sigma =
        std::sqrt(est.point * (1.0 - est.point) / static_cast<double>(sums.trials));
    est.ci_low = std::max(0.0, est.point - 3.0 * sigma);
    est.ci_high = std::min(1.0, est.point + 3.0 * sigma);
    return est;
}

}  // namespace

SuccessEstimate estimate_success(Algorithm algo, const ContractibleGraph& g, const Cut& target,
                                 SuccessEvent event, std::uint64_t trials, std::uint64_t seed,
                                 int threads, int repetitions) {
    if (trials == 0) throw InvalidArgument("estimate_success: needs trials >= 1");
    if (algo == Algorithm::oracle)
        throw InvalidArgument("estimate_success: oracle tag is not a randomized algorithm");
    check_target_is_minimum(g, target);
    const auto side = canonical_side(target.side, g.original_size());
    const TrialSums sums = run_trials_parallel(algo, g, side, target.value, event, trials, seed,
                                               threads, repetitions);
    return finish_estimate(event, sums);
}

MeanEstimate surviving_children_stats(Algorithm algo, const ContractibleGraph& cycle,
                                      const Cut& target, std::uint64_t trials, std::uint64_t seed,
                                      int threads) {
    if (trials == 0) throw InvalidArgument("surviving_children_stats: needs trials >= 1");
    if (algo != Algorithm::fpz1 && algo != Algorithm::fpz2 && algo != Algorithm::optimal)
        throw InvalidArgument("surviving_children_stats: needs fpz1, fpz2 or optimal");
    if (!is_unit_cycle(cycle))
        throw InvalidArgument("surviving_children_stats: input must be a unit cycle");
    check_target_is_minimum(cycle, target);

    const auto side = canonical_side(target.side, cycle.original_size());
    const TrialSums sums = run_trials_parallel(algo, cycle, side, target.value,
                                               SuccessEvent::survival, trials, seed, threads);

    MeanEstimate est;
    est.trials = sums.trials;
    const double t = static_cast<double>(sums.trials);
    est.mean = static_cast<double>(sums.surviving_children) / t;
    double var = 0.0;
    if (sums.trials > 1) {
        var = (static_cast<double>(sums.surviving_children_sq) - t * est.mean * est.mean) /
              (t - 1.0);
        var = std::max(0.0, var);
    }
    const double sigma_mean = std::sqrt(var / t);
    est.ci_low = est.mean - 3.0 * sigma_mean;
    est.ci_high = est.mean + 3.0 * sigma_mean;
    return est;
}

std::string to_string(BenchFamily f) {
    return f == BenchFamily::cycle ? "cycle" : "dense";
}

double BenchRecord::ratio_n2logn() const {
    const double nn = static_cast<double>(n);
    return mean_seconds / (nn * nn * std::log(nn));
}

std::vector<BenchRecord> bench_runtime(std::span<const Algorithm> algorithms,
                                       std::span<const int> sizes, int repetitions,
                                       std::uint64_t seed, BenchFamily family) {
    if (sizes.empty()) throw InvalidArgument("bench_runtime: needs at least one size");
    if (repetitions < 1) throw InvalidArgument("bench_runtime: needs repetitions >= 1");
    if (algorithms.empty()) throw InvalidArgument("bench_runtime: needs at least one algorithm");

    const RandomSource root(seed);
    std::vector<BenchRecord> records;
    std::uint64_t stream_index = 0;

    for (const Algorithm algo : algorithms) {
        for (const int n : sizes) {
            if (n < 3) throw InvalidArgument("bench_runtime: sizes must be >= 3");
            RandomSource gen_rng = root.stream(stream_index++);
            const ContractibleGraph g =
                family == BenchFamily::cycle
                    ? make_cycle(n)
                    : make_random_connected(n, 0.5, 1, 100, gen_rng);

            const int warmup = repetitions >= 2 ? std::max(1, repetitions / 20) : 0;
            BenchRecord rec;
            rec.n = n;
            rec.algorithm = algo;
            rec.family = family;
            rec.repetitions = repetitions;
            std::uint64_t contractions = 0;
            std::uint64_t calls = 0;
            double seconds = 0.0;
            for (int rep = 0; rep < repetitions; ++rep) {
                RandomSource rng = root.stream(stream_index).stream(static_cast<std::uint64_t>(rep));
                RunStats stats;
                RunConfig cfg;
                cfg.stats = &stats;
                const auto t0 = std::chrono::steady_clock::now();
                (void)run_algorithm(algo, g, rng, cfg);
                const auto t1 = std::chrono::steady_clock::now();
                if (rep < warmup) continue;
                seconds += std::chrono::duration<double>(t1 - t0).count();
                contractions += stats.contractions;
                calls += stats.recursive_calls;
            }
            ++stream_index;
            const double measured = static_cast<double>(repetitions - warmup);
            rec.mean_seconds = seconds / measured;
            rec.mean_contractions = static_cast<double>(contractions) / measured;
            rec.mean_calls = static_cast<double>(calls) / measured;
            records.push_back(rec);
        }
    }
    return records;
}

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string estimate_csv_header() {
    return "graph,algorithm,event,n,trials,point,ci_low,ci_high,analytic_reference";
}

std::string estimate_csv_row(const std::string& graph_label, Algorithm algo, int n,
                             const SuccessEstimate& est, double analytic_reference) {
    std::string row = graph_label;
    row += ',';
    row += to_string(algo);
    row += ',';
    row += to_string(est.event);
    row += ',';
    row += std::to_string(n);
    row += ',';
    row += std::to_string(est.trials);
    row += ',';
    row += fmt_double(est.point);
    row += ',';
    row += fmt_double(est.ci_low);
    row += ',';
    row += fmt_double(est.ci_high);
    row += ',';
    if (!std::isnan(analytic_reference)) row += fmt_double(analytic_reference);
    return row;
}

std::string bench_csv_header() { return "n,algorithm,mean_seconds,ratio_n2logn"; }

std::string bench_csv_row(const BenchRecord& record) {
    std::string row = std::to_string(record.n);
    row += ',';
    row += to_string(record.algorithm);
    row += ',';
    row += fmt_double(record.mean_seconds);
    row += ',';
    row += fmt_double(record.ratio_n2logn());
    return row;
}

}  // namespace mincut
