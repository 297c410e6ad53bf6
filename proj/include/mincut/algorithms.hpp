#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

/// Lower bound on the probability that a fixed minimum cut survives one
/// capacity-proportional contraction of an n-node graph: 1 - 2/n.
double p_n(int n);

/// Distribution of the number of recursive child calls made at a size-n
/// node of a recursive contraction algorithm.
///
/// geometric       k with probability p_n (1-p_n)^(k-1), mean 1/p_n
/// lambda_mixture  k0 = ceil(1/p_n) - 1 calls with probability
///                 lambda = (k0+1) - 1/p_n, else k0+1, mean 1/p_n
/// fixed           a constant count
///
/// The two tuned policies satisfy mean(n) * p_n == 1 exactly.
class BranchingPolicy {
public:
    enum class Kind { geometric, lambda_mixture, fixed };

    static BranchingPolicy geometric() { return BranchingPolicy{Kind::geometric, 0}; }
    static BranchingPolicy lambda_mixture() { return BranchingPolicy{Kind::lambda_mixture, 0}; }
    static BranchingPolicy fixed(int count);

    Kind kind() const { return kind_; }

    /// Number of child calls at a size-n node (n >= 3). Draws use exact
    /// integer arithmetic, so the probabilities are exact rationals.
    int draw(int n, RandomSource& rng) const;

    /// Expected number of child calls at a size-n node.
    double mean(int n) const;

    /// Mixture parameters of the lambda_mixture policy at size n:
    /// {base count k0, probability of drawing k0}.
    static std::pair<int, double> mixture_at(int n);

private:
    BranchingPolicy(Kind k, int c) : kind_(k), fixed_count_(c) {}

    Kind kind_;
    int fixed_count_;
};

/// Instrumentation of one recursion tree.
///
/// recursive_calls counts spawned child invocations (the root is not a
/// recursive call), so a 2-node input reports 0 calls but 1 leaf.
struct RunStats {
    std::uint64_t recursive_calls = 0;
    std::uint64_t contractions = 0;
    std::uint64_t leaves = 0;
    // leaves whose bipartition equals the tracked cut
    std::uint64_t survival_leaves = 0;
    // immediate children of the root, and those whose spawning contraction
    // kept the tracked cut alive
    std::uint64_t top_level_children = 0;
    std::uint64_t top_level_surviving_children = 0;
};

/// Optional per-run instrumentation and cut tracking.
struct RunConfig {
    RunStats* stats = nullptr;
    /// When set, survival of this fixed cut is recorded per leaf,
    /// independently of which cut the run returns.
    const std::vector<VertexId>* target_side = nullptr;
    /// fpz_v2 only: hard cap on same-size repeat calls at one node.
    int same_size_cap = 10000;
};

/// Karger's contraction algorithm: sample + contract down to 2 supernodes.
/// Exactly n-2 contractions.
Cut karger_single_run(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg = {});

/// Best cut over independent single runs.
Cut karger_repeated(const ContractibleGraph& g, int repetitions, RandomSource& rng,
                    const RunConfig& cfg = {});

/// Classic recursive contraction: twice contract to ceil(n/sqrt(2) + 1)
/// nodes and recurse, exhaustive search at n <= 6.
Cut karger_stein(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg = {});

/// Recursive contraction with geometric branching: draw k ~ geometric(p_n),
/// spawn k children each contracting one sampled edge, return the best.
Cut fpz_v1(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg = {});

/// Coin-flip formulation of the same algorithm: contract + recurse once,
/// and with probability 1 - p_n recurse again on the unchanged graph.
/// Child counts per node are geometric(p_n), exactly as in fpz_v1.
Cut fpz_v2(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg = {});

/// Tuned two-point branching: at size n >= 5 one child with probability
/// (n-4)/(n-2), else two. At n = 4 always two children, at n = 3 always
/// three (the lambda_mixture rule), keeping mean children * p_n == 1.
Cut optimal_variant(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg = {});

enum class Algorithm { karger, karger_stein, fpz1, fpz2, optimal, oracle };

std::string to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

/// Dispatch by tag. `repetitions` applies to the karger tag (best of R runs)
/// and is ignored elsewhere. The oracle tag routes to deterministic_min_cut.
Cut run_algorithm(Algorithm algo, const ContractibleGraph& g, RandomSource& rng,
                  const RunConfig& cfg = {}, int repetitions = 1);

}  // namespace mincut
