#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "mincut/generate.hpp"
#include "mincut/graph.hpp"

using namespace mincut;

namespace {

ContractibleGraph triangle(std::uint64_t w01 = 1, std::uint64_t w02 = 1, std::uint64_t w12 = 1) {
    std::vector<EdgeSpec<long long>> edges{{0, 1, static_cast<long long>(w01)},
                                           {0, 2, static_cast<long long>(w02)},
                                           {1, 2, static_cast<long long>(w12)}};
    return build_graph(3, edges);
}

}  // namespace

TEST_CASE("build merges parallel edges and drops zeros") {
    std::vector<EdgeSpec<long long>> edges{{0, 1, 1}, {0, 1, 1}, {1, 2, 2}, {0, 2, 0}};
    const auto g = build_graph(3, edges);
    CHECK(g.capacity(0, 1) == 2);
    CHECK(g.capacity(1, 2) == 2);
    CHECK(g.capacity(0, 2) == 0);
    CHECK(g.total_capacity() == 4);
    CHECK(g.size() == 3);
    CHECK(g.original_size() == 3);
}

TEST_CASE("build on a single edge") {
    std::vector<EdgeSpec<long long>> edges{{0, 1, 5}};
    const auto g = build_graph(2, edges);
    CHECK(g.total_capacity() == 5);
    CHECK(g.size() == 2);
}

TEST_CASE("build rejects bad inputs with distinct diagnostics") {
    using Edges = std::vector<EdgeSpec<long long>>;
    CHECK_THROWS_WITH_AS(build_graph(3, Edges{{0, 0, 1}}), doctest::Contains("self-loop"),
                         InvalidArgument);
    CHECK_THROWS_WITH_AS(build_graph(3, Edges{{0, 1, -2}}), doctest::Contains("negative"),
                         InvalidArgument);
    CHECK_THROWS_WITH_AS(build_graph(1, Edges{}), doctest::Contains("at least 2"),
                         InvalidArgument);
    CHECK_THROWS_WITH_AS(build_graph(3, Edges{{0, 3, 1}}), doctest::Contains("out of range"),
                         InvalidArgument);
}

TEST_CASE("contract merges capacities and discards the joining edge") {
    auto g = triangle();
    g.contract(0, 1);
    CHECK(g.size() == 2);
    CHECK(g.capacity(0, 1) == 2);
    CHECK(g.total_capacity() == 2);
    const auto side0 = g.members(0);
    CHECK(side0 == std::vector<VertexId>{0, 1});
    CHECK(g.members(1) == std::vector<VertexId>{2});
}

TEST_CASE("contracting one edge of a 4-cycle yields a triangle") {
    auto g = make_cycle(4);
    g.contract(0, 1);
    CHECK(g.size() == 3);
    // merged node {0,1} keeps slot 0; slot 3 moved into slot 1
    std::uint64_t total = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) total += g.capacity(a, b);
    CHECK(total == 3);
    CHECK(g.total_capacity() == 3);
    CHECK(is_unit_cycle(make_cycle(4)));
}

TEST_CASE("slot renaming rule: hi merges into lo, last takes hi's id") {
    auto g = make_cycle(5);
    const auto last_members = g.members(4);
    g.contract(1, 3);
    CHECK(g.members(1) == std::vector<VertexId>{1, 3});
    CHECK(g.members(3) == last_members);
}

TEST_CASE("contraction on a unit n-cycle yields a unit (n-1)-cycle") {
    RandomSource rng(17);
    for (int n = 3; n <= 12; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            auto g = make_cycle(n);
            const auto [a, b] = g.sample_edge(rng);
            if (n == 3) continue;  // contracting C3 gives a doubled pair, not a cycle
            g.contract(a, b);
            CHECK(g.size() == n - 1);
            CHECK(g.total_capacity() == static_cast<std::uint64_t>(n - 1));
            for (int s = 0; s < g.size(); ++s) CHECK(g.slot_degree(s) == 2);
        }
    }
}

TEST_CASE("total capacity drops by exactly the contracted pair capacity") {
    RandomSource rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(7));
        auto g = make_random_connected(n, 0.6, 1, 9, rng);
        while (g.size() > 2) {
            const auto [a, b] = g.sample_edge(rng);
            const std::uint64_t before = g.total_capacity();
            const std::uint64_t joining = g.capacity(a, b);
            g.contract(a, b);
            CHECK(g.total_capacity() == before - joining);
        }
    }
}

TEST_CASE("contracted pair capacities equal original cross-capacity of member sets") {
    RandomSource rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(7));
        const auto original = make_random_connected(n, 0.7, 1, 9, rng);
        auto g = original;
        for (int steps = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 2)));
             steps > 0; --steps) {
            const auto [a, b] = g.sample_edge(rng);
            g.contract(a, b);
        }
        for (int a = 0; a < g.size(); ++a) {
            const auto mem_a = g.members(a);
            for (int b = a + 1; b < g.size(); ++b) {
                std::uint64_t expect = 0;
                for (VertexId va : mem_a)
                    for (VertexId vb : g.members(b)) expect += original.capacity(va, vb);
                CHECK(g.capacity(a, b) == expect);
            }
        }
        // membership stays a partition
        const auto slot_of = g.membership();
        std::vector<int> count(g.size(), 0);
        for (int v = 0; v < n; ++v) {
            REQUIRE(slot_of[v] >= 0);
            ++count[slot_of[v]];
        }
        for (int s = 0; s < g.size(); ++s) CHECK(count[s] >= 1);
    }
}

TEST_CASE("contract error cases") {
    auto g = triangle();
    CHECK_THROWS_AS(g.contract(0, 0), InvalidArgument);
    CHECK_THROWS_AS(g.contract(0, 3), InvalidArgument);
    g.contract(0, 1);
    CHECK_THROWS_AS(g.contract(0, 1), GraphError);
}

TEST_CASE("sample_edge is exactly capacity-proportional") {
    const auto g = triangle(1, 2, 3);
    RandomSource rng(31);
    std::map<std::pair<int, int>, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[g.sample_edge(rng)];
    const double expected[] = {1.0 / 6, 2.0 / 6, 3.0 / 6};
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k) {
        const double p = expected[k];
        const double sigma = std::sqrt(p * (1 - p) * draws);
        CHECK(std::abs(counts[pairs[k]] - p * draws) < 3 * sigma);
    }
}

TEST_CASE("sample_edge on a single pair and on an empty graph") {
    std::vector<EdgeSpec<long long>> one{{0, 1, 4}};
    const auto g = build_graph(2, one);
    RandomSource rng(37);
    for (int i = 0; i < 10; ++i) CHECK(g.sample_edge(rng) == std::pair<int, int>{0, 1});

    std::vector<EdgeSpec<long long>> zero{{0, 1, 0}};
    const auto empty = build_graph(2, zero);
    CHECK_THROWS_WITH_AS(empty.sample_edge(rng), doctest::Contains("no contractible edge"),
                         GraphError);
}

TEST_CASE("cut_value on the spec examples") {
    const auto c4 = make_cycle(4);
    CHECK(cut_value(c4, std::vector<VertexId>{0, 1}) == 2);
    const auto k4 = make_complete(4);
    CHECK(cut_value(k4, std::vector<VertexId>{0}) == 3);
    std::vector<EdgeSpec<long long>> path_edges{{0, 1, 1}, {1, 2, 1}};
    const auto path = build_graph(3, path_edges);
    CHECK(cut_value(path, std::vector<VertexId>{0}) == 1);

    CHECK_THROWS_AS(cut_value(path, std::vector<VertexId>{}), InvalidArgument);
    CHECK_THROWS_AS(cut_value(path, std::vector<VertexId>{0, 1, 2}), InvalidArgument);
    auto contracted = make_cycle(4);
    contracted.contract(0, 1);
    CHECK_THROWS_AS(cut_value(contracted, std::vector<VertexId>{0}), InvalidArgument);
}

TEST_CASE("cut_of_supernode matches cut_value on the original graph") {
    auto g = triangle();
    g.contract(0, 1);
    const Cut cut = g.cut_of_supernode();
    CHECK(cut.value == 2);
    CHECK(same_partition(cut.side, std::vector<VertexId>{2}, 3));

    RandomSource rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(6));
        const auto original = make_random_connected(n, 0.7, 1, 7, rng);
        auto work = original;
        while (work.size() > 2) {
            const auto [a, b] = work.sample_edge(rng);
            work.contract(a, b);
        }
        const Cut cut = work.cut_of_supernode();
        CHECK(cut.value == cut_value(original, cut.side));
    }

    CHECK_THROWS_AS(triangle().cut_of_supernode(), GraphError);
}

TEST_CASE("clone_for_trial isolates merge provenance") {
    const auto base = make_cycle(6);
    auto a = base.clone_for_trial();
    auto b = base.clone_for_trial();
    a.contract(0, 1);
    a.contract(0, 1);  // second merge picks up old slot 5, renamed into slot 1
    b.contract(2, 3);
    CHECK(a.members(0) == std::vector<VertexId>{0, 1, 5});
    CHECK(b.members(2) == std::vector<VertexId>{2, 3});
}

TEST_CASE("cut partition identity is complement-insensitive") {
    CHECK(same_partition(std::vector<VertexId>{0, 1}, std::vector<VertexId>{2, 3}, 4));
    CHECK(!same_partition(std::vector<VertexId>{0, 1}, std::vector<VertexId>{1, 2}, 4));
    CHECK(canonical_side(std::vector<VertexId>{2, 3}, 4) == std::vector<VertexId>{0, 1});
}

TEST_CASE("fractional capacities work and keep totals consistent") {
    std::vector<EdgeSpec<double>> edges{{0, 1, 0.5}, {1, 2, 0.25}, {0, 2, 0.125}};
    auto g = FractionalGraph::build<double>(3, edges);
    CHECK(g.total_capacity() == doctest::Approx(0.875).epsilon(1e-9));
    RandomSource rng(43);
    const auto [a, b] = g.sample_edge(rng);
    CHECK(a < b);
    g.contract(0, 1);
    CHECK(g.total_capacity() == doctest::Approx(0.375).epsilon(1e-9));
    CHECK(cut_value(FractionalGraph::build<double>(3, edges), std::vector<VertexId>{1}) ==
          doctest::Approx(0.75));

    std::vector<EdgeSpec<double>> bad{{0, 1, -0.5}};
    CHECK_THROWS_AS(FractionalGraph::build<double>(2, bad), InvalidArgument);
}

TEST_CASE("graph equality sees structure through copies") {
    const auto g = make_cycle(5);
    auto copy = g;
    CHECK(copy == g);
    copy.contract(0, 1);
    CHECK_FALSE(copy == g);
}
