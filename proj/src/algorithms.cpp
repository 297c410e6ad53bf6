#include "mincut/algorithms.hpp"

#include <cmath>
#include <limits>

#include "mincut/oracle.hpp"

namespace mincut {

double p_n(int n) {
    if (n < 2) throw InvalidArgument("p_n: needs n >= 2");
    return 1.0 - 2.0 / static_cast<double>(n);
}

BranchingPolicy BranchingPolicy::fixed(int count) {
    if (count < 1) throw InvalidArgument("fixed branching needs count >= 1");
    return BranchingPolicy{Kind::fixed, count};
}

std::pair<int, double> BranchingPolicy::mixture_at(int n) {
    if (n < 3) throw InvalidArgument("mixture_at: needs n >= 3");
    // base = ceil(1/p_n) - 1, lambda = (base+1) - 1/p_n, both exact in integers
    const long long ceil_inv_p = (2LL * n - 3) / (n - 2);  // ceil(n/(n-2))
    const int base = static_cast<int>(ceil_inv_p) - 1;
    const long long thr = (base + 1LL) * (n - 2) - n;  // lambda * (n-2)
    return {base, static_cast<double>(thr) / static_cast<double>(n - 2)};
}

int BranchingPolicy::draw(int n, RandomSource& rng) const {
    if (n < 3) throw InvalidArgument("branching draw: needs n >= 3");
    switch (kind_) {
        case Kind::fixed:
            return fixed_count_;
        case Kind::geometric: {
            // count flips until heads, P[heads] = (n-2)/n exactly
            int k = 1;
            while (!rng.bernoulli(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(n)))
                ++k;
            return k;
        }
        case Kind::lambda_mixture: {
            const long long ceil_inv_p = (2LL * n - 3) / (n - 2);
            const int base = static_cast<int>(ceil_inv_p) - 1;
            const long long thr = (base + 1LL) * (n - 2) - n;
            return rng.bernoulli(static_cast<std::uint64_t>(thr), static_cast<std::uint64_t>(n - 2))
                       ? base
                       : base + 1;
        }
    }
    throw InvalidArgument("branching draw: unknown policy");
}

double BranchingPolicy::mean(int n) const {
    if (n < 3) throw InvalidArgument("branching mean: needs n >= 3");
    if (kind_ == Kind::fixed) return static_cast<double>(fixed_count_);
    // both tuned policies have mean 1/p_n
    return static_cast<double>(n) / static_cast<double>(n - 2);
}

namespace {

/// Per-slot side of a tracked cut, maintained under contraction. Once a
/// contraction merges across the cut the state goes (and stays) dead.
struct TargetState {
    bool enabled = false;
    bool alive = false;
    std::vector<std::uint8_t> side_of_slot;

    static TargetState make(const ContractibleGraph& g, const std::vector<VertexId>& side) {
        const int n = g.original_size();
        std::vector<std::uint8_t> in_side(n, 0);
        std::size_t count = 0;
        for (VertexId v : side) {
            if (v >= static_cast<VertexId>(n))
                throw InvalidArgument("target side: vertex id out of range");
            if (!in_side[v]) {
                in_side[v] = 1;
                ++count;
            }
        }
        if (count == 0 || count == static_cast<std::size_t>(n))
            throw InvalidArgument("target side must be a nontrivial proper subset");
        TargetState t;
        t.enabled = true;
        t.alive = true;
        t.side_of_slot.resize(g.size());
        for (int s = 0; s < g.size() && t.alive; ++s) {
            const auto mem = g.members(s);
            const std::uint8_t tag = in_side[mem.front()];
            t.side_of_slot[s] = tag;
            for (VertexId v : mem)
                if (in_side[v] != tag) t.alive = false;
        }
        if (!t.alive) t.side_of_slot.clear();
        return t;
    }

    // mirrors ContractibleGraph::contract: hi merges into lo, last -> hi
    void on_contract(int lo, int hi, int old_size) {
        if (!alive) return;
        if (side_of_slot[lo] != side_of_slot[hi]) {
            alive = false;
            side_of_slot.clear();
            return;
        }
        side_of_slot[hi] = side_of_slot[old_size - 1];
        side_of_slot.resize(old_size - 1);
    }
};

struct TrialGraph {
    ContractibleGraph g;
    TargetState target;

    void contract(int a, int b) {
        target.on_contract(std::min(a, b), std::max(a, b), g.size());
        g.contract(a, b);
    }
};

struct Ctx {
    Ctx(RandomSource& r, int cap) : rng(r), same_size_cap(cap) {}

    RandomSource& rng;
    int same_size_cap;
    RunStats stats{};
    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
    std::vector<VertexId> best_side;

    void offer(std::uint64_t value, std::vector<VertexId>&& side) {
        if (value < best_value) {
            best_value = value;
            best_side = std::move(side);
        }
    }

    void leaf(const TrialGraph& t) {
        ++stats.leaves;
        if (t.target.alive) ++stats.survival_leaves;
        const std::uint64_t value = t.g.capacity(0, 1);
        if (value < best_value) {
            auto side = t.g.members(0);
            if (!std::binary_search(side.begin(), side.end(), VertexId{0})) side = t.g.members(1);
            offer(value, std::move(side));
        }
    }
};

TrialGraph make_trial(const ContractibleGraph& g, const RunConfig& cfg) {
    TrialGraph t{g.clone_for_trial(), {}};
    if (cfg.target_side) t.target = TargetState::make(t.g, *cfg.target_side);
    return t;
}

Cut finish(Ctx& c, const ContractibleGraph& g, const RunConfig& cfg) {
    if (cfg.stats) *cfg.stats = c.stats;
    return Cut{canonical_side(c.best_side, g.original_size()), c.best_value};
}

void require_connected(const ContractibleGraph& g) {
    if (!g.connected()) throw GraphError("graph is disconnected");
}

/// Shared recursion for the branching-policy algorithms (geometric branching
/// and the tuned two-point mixture): every child contracts one sampled edge
/// of this graph and recurses one size smaller.
void branching_node(Ctx& c, TrialGraph&& t, const BranchingPolicy& policy, bool root) {
    const int n = t.g.size();
    if (n == 2) {
        c.leaf(t);
        return;
    }
    const int k = policy.draw(n, c.rng);
    if (root) c.stats.top_level_children += static_cast<std::uint64_t>(k);
    for (int i = 0; i < k; ++i) {
        const bool last = (i + 1 == k);
        const auto [a, b] = t.g.sample_edge(c.rng);
        TrialGraph child = last ? std::move(t) : TrialGraph(t);
        child.contract(a, b);
        ++c.stats.contractions;
        ++c.stats.recursive_calls;
        if (root && child.target.alive) ++c.stats.top_level_surviving_children;
        branching_node(c, std::move(child), policy, false);
    }
}

/// Coin-flip formulation: same-size repeats run iteratively, so the stack
/// depth stays bounded by the graph size.
void coinflip_node(Ctx& c, TrialGraph&& t, bool root) {
    const int n = t.g.size();
    if (n == 2) {
        c.leaf(t);
        return;
    }
    int repeats = 0;
    for (;;) {
        const bool heads =
            c.rng.bernoulli(static_cast<std::uint64_t>(n - 2), static_cast<std::uint64_t>(n));
        const auto [a, b] = t.g.sample_edge(c.rng);
        TrialGraph child = heads ? std::move(t) : TrialGraph(t);
        child.contract(a, b);
        ++c.stats.contractions;
        ++c.stats.recursive_calls;
        if (root) {
            ++c.stats.top_level_children;
            if (child.target.alive) ++c.stats.top_level_surviving_children;
        }
        coinflip_node(c, std::move(child), false);
        if (heads) return;
        if (++repeats >= c.same_size_cap)
            throw Error("fpz_v2: same-size repeat cap exceeded");
    }
}

/// Exhaustive minimum over all bipartitions of the remaining supernodes.
void exhaustive_base(Ctx& c, const TrialGraph& t) {
    ++c.stats.leaves;
    if (t.target.alive) ++c.stats.survival_leaves;
    const int m = t.g.size();
    if (m == 2) {
        const std::uint64_t value = t.g.capacity(0, 1);
        if (value < c.best_value) {
            auto side = t.g.members(0);
            c.offer(value, std::move(side));
        }
        return;
    }
    // sides containing slot 0; bits 0..m-2 select slots 1..m-1
    const unsigned full = (1u << (m - 1)) - 1;
    for (unsigned code = 0; code < full; ++code) {
        std::uint64_t value = 0;
        for (int a = 0; a < m; ++a) {
            const bool a_in = (a == 0) || ((code >> (a - 1)) & 1u);
            if (!a_in) continue;
            for (int b = 0; b < m; ++b) {
                const bool b_in = (b == 0) || ((code >> (b - 1)) & 1u);
                if (!b_in) value += t.g.capacity(a, b);
            }
        }
        if (value < c.best_value) {
            std::vector<VertexId> side = t.g.members(0);
            for (int s = 1; s < m; ++s) {
                if (!((code >> (s - 1)) & 1u)) continue;
                const auto mem = t.g.members(s);
                side.insert(side.end(), mem.begin(), mem.end());
            }
            std::sort(side.begin(), side.end());
            c.offer(value, std::move(side));
        }
    }
}

void karger_stein_node(Ctx& c, TrialGraph&& t, bool root) {
    const int n = t.g.size();
    if (n <= 6) {
        exhaustive_base(c, t);
        return;
    }
    const int shrink_to = static_cast<int>(std::ceil(static_cast<double>(n) / std::sqrt(2.0) + 1.0));
    if (root) c.stats.top_level_children += 2;
    for (int i = 0; i < 2; ++i) {
        const bool last = (i == 1);
        TrialGraph child = last ? std::move(t) : TrialGraph(t);
        while (child.g.size() > shrink_to) {
            const auto [a, b] = child.g.sample_edge(c.rng);
            child.contract(a, b);
            ++c.stats.contractions;
        }
        ++c.stats.recursive_calls;
        if (root && child.target.alive) ++c.stats.top_level_surviving_children;
        karger_stein_node(c, std::move(child), false);
    }
}

}  // namespace

Cut karger_single_run(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg) {
    Ctx c{rng, cfg.same_size_cap};
    TrialGraph t = make_trial(g, cfg);
    while (t.g.size() > 2) {
        const auto [a, b] = t.g.sample_edge(rng);
        t.contract(a, b);
        ++c.stats.contractions;
    }
    c.leaf(t);
    return finish(c, g, cfg);
}

Cut karger_repeated(const ContractibleGraph& g, int repetitions, RandomSource& rng,
                    const RunConfig& cfg) {
    if (repetitions < 1) throw InvalidArgument("karger_repeated: needs repetitions >= 1");
    Cut best;
    RunStats total;
    bool first = true;
    for (int r = 0; r < repetitions; ++r) {
        RunStats one;
        RunConfig sub = cfg;
        sub.stats = &one;
        Cut cut = karger_single_run(g, rng, sub);
        total.contractions += one.contractions;
        total.leaves += one.leaves;
        total.survival_leaves += one.survival_leaves;
        if (first || cut.value < best.value) {
            best = std::move(cut);
            first = false;
        }
    }
    if (cfg.stats) *cfg.stats = total;
    return best;
}

Cut karger_stein(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg) {
    require_connected(g);
    Ctx c{rng, cfg.same_size_cap};
    karger_stein_node(c, make_trial(g, cfg), true);
    return finish(c, g, cfg);
}

Cut fpz_v1(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg) {
    require_connected(g);
    Ctx c{rng, cfg.same_size_cap};
    branching_node(c, make_trial(g, cfg), BranchingPolicy::geometric(), true);
    return finish(c, g, cfg);
}

Cut fpz_v2(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg) {
    require_connected(g);
    Ctx c{rng, cfg.same_size_cap};
    coinflip_node(c, make_trial(g, cfg), true);
    return finish(c, g, cfg);
}

Cut optimal_variant(const ContractibleGraph& g, RandomSource& rng, const RunConfig& cfg) {
    require_connected(g);
    Ctx c{rng, cfg.same_size_cap};
    branching_node(c, make_trial(g, cfg), BranchingPolicy::lambda_mixture(), true);
    return finish(c, g, cfg);
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::karger: return "karger";
        case Algorithm::karger_stein: return "karger-stein";
        case Algorithm::fpz1: return "fpz1";
        case Algorithm::fpz2: return "fpz2";
        case Algorithm::optimal: return "optimal";
        case Algorithm::oracle: return "oracle";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    if (name == "karger") return Algorithm::karger;
    if (name == "karger-stein") return Algorithm::karger_stein;
    if (name == "fpz1") return Algorithm::fpz1;
    if (name == "fpz2") return Algorithm::fpz2;
    if (name == "optimal") return Algorithm::optimal;
    if (name == "oracle") return Algorithm::oracle;
    return std::nullopt;
}

Cut run_algorithm(Algorithm algo, const ContractibleGraph& g, RandomSource& rng,
                  const RunConfig& cfg, int repetitions) {
    switch (algo) {
        case Algorithm::karger:
            return repetitions == 1 ? karger_single_run(g, rng, cfg)
                                    : karger_repeated(g, repetitions, rng, cfg);
        case Algorithm::karger_stein: return karger_stein(g, rng, cfg);
        case Algorithm::fpz1: return fpz_v1(g, rng, cfg);
        case Algorithm::fpz2: return fpz_v2(g, rng, cfg);
        case Algorithm::optimal: return optimal_variant(g, rng, cfg);
        case Algorithm::oracle: return deterministic_min_cut(g);
    }
    throw InvalidArgument("unknown algorithm tag");
}

}  // namespace mincut
