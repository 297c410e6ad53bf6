#pragma once

#include <cstdint>

#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

/// Unit n-cycle: vertices 0..n-1, edges (i, i+1 mod n) of capacity 1.
/// Every pair of cycle edges induces a minimum cut of value 2.
ContractibleGraph make_cycle(int n);

/// Unit complete graph K_n (minimum cut n-1, the singletons).
ContractibleGraph make_complete(int n);

struct PlantedSpec {
    int size_a = 4;
    int size_b = 4;
    std::uint64_t intra = 10;  // capacity of every in-cluster edge
    std::uint64_t inter = 1;   // capacity of each crossing edge
    int crossing = 2;          // number of crossing edges
};

/// Two intra-dense clusters joined by a known light cut.
struct PlantedGraph {
    ContractibleGraph graph;
    Cut planted_cut;  // side = first cluster, value = inter * crossing
};

PlantedGraph make_planted(const PlantedSpec& spec, RandomSource& rng);

/// Erdos-Renyi-style connected graph with integer capacities drawn
/// uniformly from [cap_lo, cap_hi]. Regenerates until connected;
/// gives up after max_retries attempts.
ContractibleGraph make_random_connected(int n, double edge_prob, std::uint64_t cap_lo,
                                        std::uint64_t cap_hi, RandomSource& rng,
                                        int max_retries = 100);

/// True when g is an uncontracted unit cycle (every vertex has exactly two
/// unit-capacity neighbours and the graph is one cycle).
bool is_unit_cycle(const ContractibleGraph& g);

}  // namespace mincut
