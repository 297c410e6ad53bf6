#include "mincut/generate.hpp"

#include <numeric>
#include <utility>

namespace mincut {

namespace {

using Edge = EdgeSpec<long long>;

ContractibleGraph from_edges(int n, const std::vector<Edge>& edges) {
    return ContractibleGraph::build<long long>(n, edges);
}

}  // namespace

ContractibleGraph make_cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle generator needs n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), 1});
    return from_edges(n, edges);
}

ContractibleGraph make_complete(int n) {
    if (n < 2) throw InvalidArgument("complete generator needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), 1});
    return from_edges(n, edges);
}

PlantedGraph make_planted(const PlantedSpec& spec, RandomSource& rng) {
    if (spec.size_a < 2 || spec.size_b < 2)
        throw InvalidArgument("planted generator needs both cluster sizes >= 2");
    if (spec.intra == 0 || spec.inter == 0)
        throw InvalidArgument("planted generator needs positive capacities");
    if (spec.crossing < 1) throw InvalidArgument("planted generator needs >= 1 crossing edge");
    const long long max_cross = static_cast<long long>(spec.size_a) * spec.size_b;
    if (spec.crossing > max_cross)
        throw InvalidArgument("planted generator: more crossing edges than cluster pairs");
    // the planted cut must stay strictly below any in-cluster cut
    const std::uint64_t lightest_intra =
        spec.intra * static_cast<std::uint64_t>(std::min(spec.size_a, spec.size_b) - 1);
    if (spec.inter * static_cast<std::uint64_t>(spec.crossing) >= lightest_intra)
        throw InvalidArgument("planted generator: crossing capacity would not be the minimum cut");

    const int n = spec.size_a + spec.size_b;
    std::vector<Edge> edges;
    auto clique = [&](int lo, int hi) {
        for (int a = lo; a < hi; ++a)
            for (int b = a + 1; b < hi; ++b)
                edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b),
                                 static_cast<long long>(spec.intra)});
    };
    clique(0, spec.size_a);
    clique(spec.size_a, n);

    // distinct crossing pairs, sampled without replacement
    std::vector<char> used(static_cast<std::size_t>(max_cross), 0);
    for (int k = 0; k < spec.crossing; ++k) {
        std::uint64_t pick;
        do {
            pick = rng.next_below(static_cast<std::uint64_t>(max_cross));
        } while (used[pick]);
        used[pick] = 1;
        const int a = static_cast<int>(pick / spec.size_b);
        const int b = spec.size_a + static_cast<int>(pick % spec.size_b);
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b),
                         static_cast<long long>(spec.inter)});
    }

    PlantedGraph out{from_edges(n, edges), {}};
    out.planted_cut.side.resize(spec.size_a);
    std::iota(out.planted_cut.side.begin(), out.planted_cut.side.end(), VertexId{0});
    out.planted_cut.value = spec.inter * static_cast<std::uint64_t>(spec.crossing);
    return out;
}

ContractibleGraph make_random_connected(int n, double edge_prob, std::uint64_t cap_lo,
                                        std::uint64_t cap_hi, RandomSource& rng,
                                        int max_retries) {
    if (n < 2) throw InvalidArgument("random generator needs n >= 2");
    if (!(edge_prob > 0.0) || edge_prob > 1.0)
        throw InvalidArgument("random generator needs edge probability in (0, 1]");
    if (cap_lo == 0 || cap_lo > cap_hi)
        throw InvalidArgument("random generator needs 1 <= cap_lo <= cap_hi");

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng.next_real() >= edge_prob) continue;
                const std::uint64_t w = cap_lo + rng.next_below(cap_hi - cap_lo + 1);
                edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b),
                                 static_cast<long long>(w)});
            }
        }
        auto g = from_edges(n, edges);
        if (g.connected()) return g;
    }
    throw GraphError("random generator: no connected graph after retry limit");
}

bool is_unit_cycle(const ContractibleGraph& g) {
    const int n = g.original_size();
    if (g.size() != n || n < 3) return false;
    for (int a = 0; a < n; ++a) {
        if (g.slot_degree(a) != 2) return false;
        int neighbours = 0;
        for (int b = 0; b < n; ++b) {
            const auto w = g.capacity(a, b);
            if (w == 0) continue;
            if (w != 1) return false;
            ++neighbours;
        }
        if (neighbours != 2) return false;
    }
    return g.connected();
}

}  // namespace mincut
