#include "mincut/graph.hpp"

namespace mincut {

ContractibleGraph build_graph(int n, std::span<const EdgeSpec<long long>> edges) {
    return ContractibleGraph::build(n, edges);
}

std::vector<VertexId> canonical_side(std::span<const VertexId> side, int n) {
    std::vector<VertexId> s(side.begin(), side.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.front() == 0) return s;
    // complement contains vertex 0
    std::vector<char> in(n, 0);
    for (VertexId v : s) in[v] = 1;
    std::vector<VertexId> comp;
    comp.reserve(n - s.size());
    for (int v = 0; v < n; ++v)
        if (!in[v]) comp.push_back(static_cast<VertexId>(v));
    return comp;
}

bool same_partition(std::span<const VertexId> a, std::span<const VertexId> b, int n) {
    return canonical_side(a, n) == canonical_side(b, n);
}

}  // namespace mincut
