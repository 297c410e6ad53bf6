#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mincut/errors.hpp"
#include "mincut/rng.hpp"

namespace mincut {

using VertexId = std::uint32_t;

/// One input edge for graph construction. The weight is signed so that
/// negative capacities can be rejected with a proper diagnostic.
template <typename W>
struct EdgeSpec {
    VertexId u;
    VertexId v;
    W w;
};

/// A bipartition of the original vertices together with its capacity.
/// `side` is kept sorted; two cuts describe the same partition when their
/// sides are equal or complementary.
struct Cut {
    std::vector<VertexId> side;
    std::uint64_t value = 0;
};

/// True when `a` and `b` split the n original vertices the same way.
bool same_partition(std::span<const VertexId> a, std::span<const VertexId> b, int n);

/// The side of the partition that contains vertex 0 (sorted ascending).
std::vector<VertexId> canonical_side(std::span<const VertexId> side, int n);

/// Capacity-weighted multigraph under edge contraction.
///
/// Supernodes are dense slot ids 0..size()-1 backed by a symmetric capacity
/// matrix, so one contraction costs O(size()). The matrix costs O(n^2)
/// memory; that is the intended regime (n up to a few thousand), there is
/// no sparse fallback. contract(a, b) merges the larger slot id into the
/// smaller; the previously-last slot takes over the larger id. Callers
/// tracking per-slot state must mirror exactly that move.
///
/// A freshly built graph has slot i == original vertex i. Merge provenance
/// is kept in an append-only log shared between copies of the same trial;
/// use clone_for_trial() before handing a graph to another thread.
template <typename Cap>
class BasicContractibleGraph {
    static_assert(std::is_same_v<Cap, std::uint64_t> || std::is_floating_point_v<Cap>);

public:
    using capacity_type = Cap;

    BasicContractibleGraph() = default;

    /// Build from an edge list. Parallel edges are merged by capacity
    /// summation and zero-capacity edges dropped.
    template <typename W>
    static BasicContractibleGraph build(int n, std::span<const EdgeSpec<W>> edges) {
        if (n < 2) throw InvalidArgument("graph needs at least 2 vertices");
        BasicContractibleGraph g;
        g.n_orig_ = n;
        g.n_cur_ = n;
        g.stride_ = n;
        g.cap_.assign(static_cast<std::size_t>(n) * n, Cap{0});
        g.row_total_.assign(n, Cap{0});
        g.origin_.resize(n);
        for (int i = 0; i < n; ++i) g.origin_[i] = i;
        g.merges_ = std::make_shared<MergeLog>();
        for (const auto& e : edges) {
            if (e.u >= static_cast<VertexId>(n) || e.v >= static_cast<VertexId>(n))
                throw InvalidArgument("edge endpoint out of range");
            if (e.u == e.v) throw InvalidArgument("self-loop edges are not allowed");
            if (e.w < W{0}) throw InvalidArgument("negative edge capacity");
            if constexpr (std::is_floating_point_v<Cap>) {
                if (!std::isfinite(static_cast<double>(e.w)))
                    throw InvalidArgument("edge capacity must be finite");
            }
            const auto w = static_cast<Cap>(e.w);
            if (w == Cap{0}) continue;
            g.at(e.u, e.v) += w;
            g.at(e.v, e.u) = g.at(e.u, e.v);
            g.row_total_[e.u] += w;
            g.row_total_[e.v] += w;
            g.total_ += w;
        }
        return g;
    }

    // Compact copy: the buffer shrinks to the live prefix, logical state is
    // unchanged. The merge log stays shared (single-thread recursion only).
    BasicContractibleGraph(const BasicContractibleGraph& other)
        : n_orig_(other.n_orig_),
          n_cur_(other.n_cur_),
          stride_(other.n_cur_),
          total_(other.total_),
          row_total_(other.row_total_.begin(), other.row_total_.begin() + other.n_cur_),
          origin_(other.origin_.begin(), other.origin_.begin() + other.n_cur_),
          merges_(other.merges_) {
        cap_.resize(static_cast<std::size_t>(n_cur_) * n_cur_);
        for (int r = 0; r < n_cur_; ++r)
            std::copy_n(other.cap_.data() + static_cast<std::size_t>(r) * other.stride_,
                        n_cur_, cap_.data() + static_cast<std::size_t>(r) * stride_);
    }

    BasicContractibleGraph& operator=(const BasicContractibleGraph& other) {
        if (this != &other) *this = BasicContractibleGraph(other);
        return *this;
    }

    BasicContractibleGraph(BasicContractibleGraph&&) noexcept = default;
    BasicContractibleGraph& operator=(BasicContractibleGraph&&) noexcept = default;

    /// Copy with a private merge log; the safe way to fan a base graph out
    /// across threads.
    BasicContractibleGraph clone_for_trial() const {
        BasicContractibleGraph g(*this);
        g.merges_ = std::make_shared<MergeLog>(*merges_);
        return g;
    }

    int original_size() const { return n_orig_; }
    int size() const { return n_cur_; }
    Cap total_capacity() const { return total_; }

    Cap capacity(int a, int b) const {
        check_slot(a);
        check_slot(b);
        return a == b ? Cap{0} : at(a, b);
    }

    /// Sum of capacities incident to a slot, u(delta(slot)).
    Cap slot_degree(int a) const {
        check_slot(a);
        return row_total_[a];
    }

    /// Pick an unordered live pair with probability capacity/U.
    std::pair<int, int> sample_edge(RandomSource& rng) const {
        if (total_ <= Cap{0}) throw GraphError("no contractible edge");
        if constexpr (std::is_same_v<Cap, std::uint64_t>) {
            // exact: one draw over the directed mass 2U
            std::uint64_t x = rng.next_below(2 * total_);
            for (int a = 0; a < n_cur_; ++a) {
                if (x >= row_total_[a]) {
                    x -= row_total_[a];
                    continue;
                }
                const Cap* row = cap_.data() + static_cast<std::size_t>(a) * stride_;
                for (int b = 0; b < n_cur_; ++b) {
                    if (b == a) continue;
                    if (x < row[b]) return ordered(a, b);
                    x -= row[b];
                }
            }
        } else {
            Cap x = static_cast<Cap>(rng.next_real()) * (total_ + total_);
            int last_a = -1, last_b = -1;
            for (int a = 0; a < n_cur_; ++a) {
                if (x >= row_total_[a] && a + 1 < n_cur_) {
                    x -= row_total_[a];
                    continue;
                }
                const Cap* row = cap_.data() + static_cast<std::size_t>(a) * stride_;
                for (int b = 0; b < n_cur_; ++b) {
                    if (b == a || row[b] <= Cap{0}) continue;
                    last_a = a;
                    last_b = b;
                    if (x < row[b]) return ordered(a, b);
                    x -= row[b];
                }
            }
            // float round-off spilled past the end; the last positive pair
            if (last_a >= 0) return ordered(last_a, last_b);
        }
        throw GraphError("no contractible edge");
    }

    /// Merge slot max(a,b) into slot min(a,b). The last live slot is renamed
    /// to max(a,b). O(size()).
    void contract(int a, int b) {
        check_slot(a);
        check_slot(b);
        if (a == b) throw InvalidArgument("contract: slots must differ");
        if (n_cur_ <= 2) throw GraphError("contract: graph already at 2 supernodes");
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const int last = n_cur_ - 1;

        const Cap joining = at(lo, hi);
        Cap* row_lo = cap_.data() + static_cast<std::size_t>(lo) * stride_;
        const Cap* row_hi = cap_.data() + static_cast<std::size_t>(hi) * stride_;
        for (int c = 0; c < n_cur_; ++c) {
            if (c == lo || c == hi) continue;
            row_lo[c] += row_hi[c];
            at(c, lo) = row_lo[c];
        }
        row_total_[lo] += row_total_[hi] - joining - joining;
        total_ -= joining;
        row_lo[lo] = Cap{0};
        row_lo[hi] = Cap{0};

        merges_->push_back({origin_[lo], origin_[hi]});
        origin_[lo] = static_cast<std::int64_t>(n_orig_) + static_cast<std::int64_t>(merges_->size()) - 1;

        if (hi != last) {
            Cap* row_dst = cap_.data() + static_cast<std::size_t>(hi) * stride_;
            const Cap* row_src = cap_.data() + static_cast<std::size_t>(last) * stride_;
            for (int c = 0; c < last; ++c) {
                if (c == hi) continue;
                row_dst[c] = row_src[c];
                at(c, hi) = row_dst[c];
            }
            row_dst[hi] = Cap{0};
            row_total_[hi] = row_total_[last];
            origin_[hi] = origin_[last];
        }
        --n_cur_;
    }

    /// Original vertices belonging to one supernode, sorted ascending.
    std::vector<VertexId> members(int slot) const {
        check_slot(slot);
        std::vector<VertexId> out;
        std::vector<std::int64_t> stack{origin_[slot]};
        while (!stack.empty()) {
            const std::int64_t id = stack.back();
            stack.pop_back();
            if (id < n_orig_) {
                out.push_back(static_cast<VertexId>(id));
            } else {
                const auto& m = (*merges_)[static_cast<std::size_t>(id - n_orig_)];
                stack.push_back(m.first);
                stack.push_back(m.second);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// membership: original vertex id -> current slot id.
    std::vector<int> membership() const {
        std::vector<int> slot_of(n_orig_, -1);
        for (int s = 0; s < n_cur_; ++s)
            for (VertexId v : members(s)) slot_of[v] = s;
        return slot_of;
    }

    /// The cut left by a fully contracted graph: the side holding vertex 0,
    /// valued by the single remaining pair capacity.
    Cut cut_of_supernode() const {
        if (n_cur_ != 2) throw GraphError("cut_of_supernode: graph must have exactly 2 supernodes");
        Cut cut;
        cut.side = members(0);
        if (!std::binary_search(cut.side.begin(), cut.side.end(), VertexId{0}))
            cut.side = members(1);
        if constexpr (std::is_same_v<Cap, std::uint64_t>) {
            cut.value = at(0, 1);
        } else {
            cut.value = static_cast<std::uint64_t>(std::llround(static_cast<double>(at(0, 1))));
        }
        return cut;
    }

    /// BFS over positive-capacity pairs.
    bool connected() const {
        if (n_cur_ <= 1) return true;
        std::vector<char> seen(n_cur_, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            const int a = queue.back();
            queue.pop_back();
            const Cap* row = cap_.data() + static_cast<std::size_t>(a) * stride_;
            for (int b = 0; b < n_cur_; ++b) {
                if (!seen[b] && row[b] > Cap{0}) {
                    seen[b] = 1;
                    ++reached;
                    queue.push_back(b);
                }
            }
        }
        return reached == n_cur_;
    }

    bool operator==(const BasicContractibleGraph& other) const {
        if (n_orig_ != other.n_orig_ || n_cur_ != other.n_cur_ || total_ != other.total_)
            return false;
        if (membership() != other.membership()) return false;
        for (int a = 0; a < n_cur_; ++a)
            for (int b = a + 1; b < n_cur_; ++b)
                if (at(a, b) != other.at(a, b)) return false;
        return true;
    }

private:
    using MergeLog = std::vector<std::pair<std::int64_t, std::int64_t>>;

    Cap& at(int a, int b) { return cap_[static_cast<std::size_t>(a) * stride_ + b]; }
    const Cap& at(int a, int b) const { return cap_[static_cast<std::size_t>(a) * stride_ + b]; }

    void check_slot(int s) const {
        if (s < 0 || s >= n_cur_) throw InvalidArgument("supernode id out of range");
    }

    static std::pair<int, int> ordered(int a, int b) {
        return {std::min(a, b), std::max(a, b)};
    }

    int n_orig_ = 0;
    int n_cur_ = 0;
    int stride_ = 0;
    Cap total_{0};
    std::vector<Cap> cap_;
    std::vector<Cap> row_total_;
    std::vector<std::int64_t> origin_;
    std::shared_ptr<MergeLog> merges_;
};

using ContractibleGraph = BasicContractibleGraph<std::uint64_t>;
using FractionalGraph = BasicContractibleGraph<double>;

/// Convenience builder for integer graphs.
ContractibleGraph build_graph(int n, std::span<const EdgeSpec<long long>> edges);

/// Capacity of the cut induced by `side`, recomputed against the original
/// (uncontracted) capacities. `side` must be a nontrivial proper subset.
template <typename Cap>
Cap cut_value(const BasicContractibleGraph<Cap>& original, std::span<const VertexId> side) {
    const int n = original.original_size();
    if (original.size() != n)
        throw InvalidArgument("cut_value: needs the uncontracted graph");
    std::vector<char> in_side(n, 0);
    std::size_t marked = 0;
    for (VertexId v : side) {
        if (v >= static_cast<VertexId>(n)) throw InvalidArgument("cut side: vertex id out of range");
        if (!in_side[v]) {
            in_side[v] = 1;
            ++marked;
        }
    }
    if (marked == 0) throw InvalidArgument("cut side must not be empty");
    if (marked == static_cast<std::size_t>(n)) throw InvalidArgument("cut side must be a proper subset");
    Cap value{0};
    for (int a = 0; a < n; ++a) {
        if (!in_side[a]) continue;
        for (int b = 0; b < n; ++b)
            if (!in_side[b]) value += original.capacity(a, b);
    }
    return value;
}

}  // namespace mincut
