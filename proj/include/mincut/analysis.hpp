#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// n-th harmonic number, summed smallest-term-first in extended precision.
double harmonic(std::int64_t n);

/// Success-probability closed form of the geometric-branching recursion:
/// 1 / (2 H_n - 2).
double q_fpz_closed(int n);

enum class RecurrenceKind { fpz, optimal };

/// Q(2..N) for one of the two recursions, with S(n) = 1/Q(n).
struct RecurrenceTable {
    RecurrenceKind kind = RecurrenceKind::fpz;
    int max_n = 2;
    std::vector<double> values;  // values[i] = Q(i), valid for 2 <= i <= max_n
    double max_residual = 0.0;   // fpz only: worst fixed-point residual seen

    double Q(int n) const;
    double S(int n) const { return 1.0 / Q(n); }
};

/// Geometric-branching success recurrence, accumulated as
/// 1/Q(n) = 1/Q(n-1) + 2/n from Q(2) = 1. Each step is verified against the
/// implicit fixed-point equation
/// Q(n) = p_n^2 Q(n-1) + (1-p_n)(1 - (1-Q(n))(1-p_n Q(n-1)))
/// to residual < 1e-12.
RecurrenceTable q_fpz_recurrence(int N);

/// Success recurrence of the tuned two-point policy, matching the
/// implemented algorithm at every size:
///   Q(2) = 1
///   Q(3) = 1 - (1 - p_3)^3          (three children at n = 3)
///   Q(n) = Q(n-1) - (2(n-2)/n^2) Q(n-1)^2   for n >= 4
RecurrenceTable q_optimal_recurrence(int N);

/// Asymptotic sanity report for the tuned-policy table.
struct ThetaReport {
    int max_n = 0;
    bool monotone_ok = false;      // Q strictly decreasing
    bool halving_ok = false;       // Q(n) >= Q(n-1)/2 for all n
    bool step_ok = false;          // S(n) - S(n-1) >= 1/n for n >= 4
    double window_lo = 0.0;        // observed min of S(n)/H_n over n >= 100
    double window_hi = 0.0;        // observed max of S(n)/H_n over n >= 100
    double max_drift = 0.0;        // max |r(n) - r(n-1)| over n >= 100
};

/// Checks the halving claim, the per-step growth bound, and that S(n)/H_n
/// stays inside [1/2, 4] for 100 <= n <= N. A halving violation is a hard
/// failure (it contradicts a proven property), reported by throwing.
ThetaReport theta_bounds_check(int N);

/// Exact per-contraction survival probability 1 - lambda*/U of a fixed
/// minimum cut of value lambda*, checked against the p_n lower bound.
double survival_prob_lower_bound(const ContractibleGraph& g, std::uint64_t lambda_star);

}  // namespace mincut
