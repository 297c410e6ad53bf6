#pragma once

#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// Exhaustive minimum over all 2^(n-1) - 1 nontrivial sides containing the
/// supernode that owns vertex 0. Ties break toward the smallest side
/// bitmask. Needs size() <= 24. Shards the mask range across threads when
/// worthwhile; pass threads = 1 for the serial reference sweep.
Cut brute_force_min_cut(const ContractibleGraph& g, int threads = 0);

/// All distinct minimum cuts (up to complementation), sorted by side
/// bitmask. Needs size() <= 24.
std::vector<Cut> enumerate_min_cuts(const ContractibleGraph& g, int threads = 0);

/// Exact deterministic global minimum cut via repeated maximum-adjacency
/// (minimum-cut-phase) sweeps. O(n^3); rejects disconnected graphs.
Cut deterministic_min_cut(const ContractibleGraph& g);

}  // namespace mincut
