#include "mincut/analysis.hpp"

#include <cmath>
#include <limits>

#include "mincut/algorithms.hpp"

namespace mincut {

double harmonic(std::int64_t n) {
    if (n < 1) throw InvalidArgument("harmonic: needs n >= 1");
    long double sum = 0.0L;
    for (std::int64_t k = n; k >= 1; --k) sum += 1.0L / static_cast<long double>(k);
    return static_cast<double>(sum);
}

double q_fpz_closed(int n) {
    if (n < 2) throw InvalidArgument("q_fpz_closed: needs n >= 2");
    return static_cast<double>(1.0L / (2.0L * static_cast<long double>(harmonic(n)) - 2.0L));
}

double RecurrenceTable::Q(int n) const {
    if (n < 2 || n > max_n) throw InvalidArgument("recurrence table: n out of range");
    return values[static_cast<std::size_t>(n)];
}

RecurrenceTable q_fpz_recurrence(int N) {
    if (N < 2) throw InvalidArgument("q_fpz_recurrence: needs N >= 2");
    RecurrenceTable table;
    table.kind = RecurrenceKind::fpz;
    table.max_n = N;
    table.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    table.values[2] = 1.0;

    long double inv_q = 1.0L;  // 1/Q(2)
    long double q_prev = 1.0L;
    for (int n = 3; n <= N; ++n) {
        inv_q += 2.0L / static_cast<long double>(n);
        const long double q = 1.0L / inv_q;
        // the accumulated value must satisfy the implicit fixed-point form
        const long double p = 1.0L - 2.0L / static_cast<long double>(n);
        const long double rhs =
            p * p * q_prev + (1.0L - p) * (1.0L - (1.0L - q) * (1.0L - p * q_prev));
        const double residual = static_cast<double>(std::fabs(q - rhs));
        if (residual > table.max_residual) table.max_residual = residual;
        if (residual >= 1e-12)
            throw Error("q_fpz_recurrence: fixed-point residual exceeded 1e-12");
        table.values[static_cast<std::size_t>(n)] = static_cast<double>(q);
        q_prev = q;
    }
    return table;
}

RecurrenceTable q_optimal_recurrence(int N) {
    if (N < 2) throw InvalidArgument("q_optimal_recurrence: needs N >= 2");
    RecurrenceTable table;
    table.kind = RecurrenceKind::optimal;
    table.max_n = N;
    table.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
    table.values[2] = 1.0;

    long double q = 1.0L;
    if (N >= 3) {
        // three deterministic children at n = 3: Q = 1 - (1 - p_3 Q(2))^3
        const long double miss = 1.0L - 1.0L / 3.0L;
        q = 1.0L - miss * miss * miss;
        table.values[3] = static_cast<double>(q);
    }
    for (int n = 4; n <= N; ++n) {
        const long double nn = static_cast<long double>(n);
        q = q - (2.0L * (nn - 2.0L) / (nn * nn)) * q * q;
        table.values[static_cast<std::size_t>(n)] = static_cast<double>(q);
    }
    return table;
}

ThetaReport theta_bounds_check(int N) {
    if (N < 4) throw InvalidArgument("theta_bounds_check: needs N >= 4");
    const RecurrenceTable table = q_optimal_recurrence(N);

    ThetaReport report;
    report.max_n = N;
    report.monotone_ok = true;
    report.halving_ok = true;
    report.step_ok = true;
    report.window_lo = std::numeric_limits<double>::infinity();
    report.window_hi = 0.0;

    long double h = 1.0L + 0.5L;  // H_2
    double prev_ratio = 0.0;
    for (int n = 3; n <= N; ++n) {
        h += 1.0L / static_cast<long double>(n);
        const double q = table.Q(n);
        const double q_prev = table.Q(n - 1);
        if (!(q < q_prev)) report.monotone_ok = false;
        if (q < 0.5 * q_prev) report.halving_ok = false;
        if (n >= 4) {
            const double step = table.S(n) - table.S(n - 1);
            if (step < 1.0 / static_cast<double>(n)) report.step_ok = false;
        }
        if (n >= 100) {
            const double ratio = table.S(n) / static_cast<double>(h);
            report.window_lo = std::min(report.window_lo, ratio);
            report.window_hi = std::max(report.window_hi, ratio);
            if (n > 100)
                report.max_drift = std::max(report.max_drift, std::fabs(ratio - prev_ratio));
            prev_ratio = ratio;
        }
    }
    if (N < 100) {
        report.window_lo = 0.0;
        report.window_hi = 0.0;
    }
    if (!report.halving_ok)
        throw Error("theta_bounds_check: halving claim Q(n) >= Q(n-1)/2 violated");
    return report;
}

double survival_prob_lower_bound(const ContractibleGraph& g, std::uint64_t lambda_star) {
    const std::uint64_t total = g.total_capacity();
    if (lambda_star > total)
        throw InvalidArgument("survival_prob_lower_bound: cut value exceeds total capacity");
    const double survival =
        1.0 - static_cast<double>(lambda_star) / static_cast<double>(total);
    const double bound = p_n(g.size());
    if (survival < bound)
        throw InvalidArgument(
            "survival_prob_lower_bound: value below 1 - 2/n; lambda* is not a minimum cut value");
    return survival;
}

}  // namespace mincut
