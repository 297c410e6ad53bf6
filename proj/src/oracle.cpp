#include "mincut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mincut {

namespace {

constexpr int kMaxExhaustive = 24;

std::uint32_t gray(std::uint32_t c) { return c ^ (c >> 1); }

/// Incremental Gray-code sweep over the sides containing slot 0.
/// Bits 0..m-2 of the visited subset select slots 1..m-1. visit() is called
/// with (subset, cut value) for every nontrivial side.
template <typename Visit>
void sweep_codes(const ContractibleGraph& g, std::uint32_t code_lo, std::uint32_t code_hi,
                 Visit&& visit) {
    const int m = g.size();
    const std::uint32_t full = (1u << (m - 1)) - 1;
    std::vector<char> inside(m, 0);
    inside[0] = 1;
    std::uint32_t subset = gray(code_lo);
    for (int s = 1; s < m; ++s) inside[s] = (subset >> (s - 1)) & 1u;

    std::uint64_t value = 0;
    for (int a = 0; a < m; ++a) {
        if (!inside[a]) continue;
        for (int b = 0; b < m; ++b)
            if (!inside[b]) value += g.capacity(a, b);
    }
    if (subset != full) visit(subset, value);

    for (std::uint32_t c = code_lo; c + 1 < code_hi; ++c) {
        const int bit = std::countr_zero(c + 1);
        const int v = bit + 1;  // slot being toggled
        std::uint64_t to_inside = 0;
        for (int w = 0; w < m; ++w)
            if (inside[w]) to_inside += g.capacity(v, w);
        if (!inside[v]) {
            value += g.slot_degree(v);
            value -= 2 * to_inside;
            inside[v] = 1;
        } else {
            // to_inside already excludes the (v,v) diagonal
            value += 2 * (to_inside);
            value -= g.slot_degree(v);
            inside[v] = 0;
        }
        subset ^= (1u << bit);
        if (subset != full) visit(subset, value);
    }
}

int shard_count(int m, int threads) {
#ifdef _OPENMP
    const int hw = (threads > 0) ? threads : omp_get_max_threads();
#else
    const int hw = 1;
#endif
    if (m - 1 < 14) return 1;  // not worth splitting
    return std::max(1, hw);
}

void check_exhaustive_size(const ContractibleGraph& g) {
    if (g.size() > kMaxExhaustive)
        throw InvalidArgument("exhaustive enumeration limited to 24 supernodes; use deterministic_min_cut");
}

Cut cut_from_subset(const ContractibleGraph& g, std::uint32_t subset) {
    std::vector<VertexId> side = g.members(0);
    for (int s = 1; s < g.size(); ++s) {
        if (!((subset >> (s - 1)) & 1u)) continue;
        const auto mem = g.members(s);
        side.insert(side.end(), mem.begin(), mem.end());
    }
    std::sort(side.begin(), side.end());
    std::uint64_t value = 0;
    std::vector<char> inside(g.size(), 1);
    for (int s = 1; s < g.size(); ++s) inside[s] = (subset >> (s - 1)) & 1u;
    for (int a = 0; a < g.size(); ++a) {
        if (!inside[a]) continue;
        for (int b = 0; b < g.size(); ++b)
            if (!inside[b]) value += g.capacity(a, b);
    }
    return Cut{canonical_side(side, g.original_size()), value};
}

struct BestMask {
    std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
    std::uint32_t subset = 0;
    bool any = false;

    void offer(std::uint32_t s, std::uint64_t v) {
        // deterministic tie-break: smallest side bitmask
        const std::uint32_t mask = 1u | (s << 1);
        const std::uint32_t best_mask = 1u | (subset << 1);
        if (!any || v < value || (v == value && mask < best_mask)) {
            any = true;
            value = v;
            subset = s;
        }
    }
};

}  // namespace

Cut brute_force_min_cut(const ContractibleGraph& g, int threads) {
    check_exhaustive_size(g);
    const int m = g.size();
    const std::uint32_t codes = 1u << (m - 1);
    const int shards = shard_count(m, threads);
    std::vector<BestMask> best(shards);

#ifdef _OPENMP
#pragma omp parallel for num_threads(shards) schedule(static, 1)
#endif
    for (int s = 0; s < shards; ++s) {
        const std::uint32_t lo = static_cast<std::uint32_t>((static_cast<std::uint64_t>(codes) * s) / shards);
        const std::uint32_t hi = static_cast<std::uint32_t>((static_cast<std::uint64_t>(codes) * (s + 1)) / shards);
        if (lo < hi) sweep_codes(g, lo, hi, [&](std::uint32_t subset, std::uint64_t v) { best[s].offer(subset, v); });
    }

    BestMask overall;
    for (const auto& b : best)
        if (b.any) overall.offer(b.subset, b.value);
    return cut_from_subset(g, overall.subset);
}

std::vector<Cut> enumerate_min_cuts(const ContractibleGraph& g, int threads) {
    check_exhaustive_size(g);
    const std::uint64_t min_value = brute_force_min_cut(g, threads).value;
    const int m = g.size();
    const std::uint32_t codes = 1u << (m - 1);
    const int shards = shard_count(m, threads);
    std::vector<std::vector<std::uint32_t>> hits(shards);

#ifdef _OPENMP
#pragma omp parallel for num_threads(shards) schedule(static, 1)
#endif
    for (int s = 0; s < shards; ++s) {
        const std::uint32_t lo = static_cast<std::uint32_t>((static_cast<std::uint64_t>(codes) * s) / shards);
        const std::uint32_t hi = static_cast<std::uint32_t>((static_cast<std::uint64_t>(codes) * (s + 1)) / shards);
        if (lo < hi)
            sweep_codes(g, lo, hi, [&](std::uint32_t subset, std::uint64_t v) {
                if (v == min_value) hits[s].push_back(subset);
            });
    }

    std::vector<std::uint32_t> subsets;
    for (auto& h : hits) subsets.insert(subsets.end(), h.begin(), h.end());
    std::sort(subsets.begin(), subsets.end());
    std::vector<Cut> out;
    out.reserve(subsets.size());
    for (std::uint32_t s : subsets) out.push_back(cut_from_subset(g, s));
    return out;
}

Cut deterministic_min_cut(const ContractibleGraph& g) {
    if (!g.connected()) throw GraphError("deterministic_min_cut: graph is disconnected");
    const int n = g.size();
    if (n == 2) return g.cut_of_supernode();

    std::vector<std::uint64_t> w(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) w[static_cast<std::size_t>(a) * n + b] = g.capacity(a, b);
    std::vector<std::vector<VertexId>> group(n);
    for (int i = 0; i < n; ++i) group[i] = g.members(i);
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);

    Cut best;
    bool have_best = false;

    while (active.size() > 1) {
        // one minimum-cut phase: maximum adjacency order over active nodes
        const std::size_t k = active.size();
        std::vector<std::uint64_t> conn(k, 0);
        std::vector<char> added(k, 0);
        std::size_t prev = 0, last = 0;
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t pick = k;
            for (std::size_t i = 0; i < k; ++i) {
                if (added[i]) continue;
                if (pick == k || conn[i] > conn[pick]) pick = i;
            }
            added[pick] = 1;
            prev = last;
            last = pick;
            for (std::size_t i = 0; i < k; ++i) {
                if (added[i]) continue;
                conn[i] += w[static_cast<std::size_t>(active[pick]) * n + active[i]];
            }
        }

        const std::uint64_t phase_value = conn[last];
        if (!have_best || phase_value < best.value) {
            have_best = true;
            best.value = phase_value;
            best.side = group[active[last]];
        }

        // merge the phase's last node into its predecessor
        const int keep = active[prev];
        const int gone = active[last];
        for (int x : active) {
            if (x == keep || x == gone) continue;
            w[static_cast<std::size_t>(keep) * n + x] += w[static_cast<std::size_t>(gone) * n + x];
            w[static_cast<std::size_t>(x) * n + keep] = w[static_cast<std::size_t>(keep) * n + x];
        }
        group[keep].insert(group[keep].end(), group[gone].begin(), group[gone].end());
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
    }

    std::sort(best.side.begin(), best.side.end());
    best.side = canonical_side(best.side, g.original_size());
    return best;
}

}  // namespace mincut
