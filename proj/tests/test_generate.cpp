#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mincut/generate.hpp"
#include "mincut/oracle.hpp"

using namespace mincut;

TEST_CASE("cycle generator") {
    const auto g = make_cycle(5);
    CHECK(g.total_capacity() == 5);
    int edges = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (g.capacity(a, b) > 0) ++edges;
    CHECK(edges == 5);
    CHECK(brute_force_min_cut(g).value == 2);
    CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
}

TEST_CASE("complete generator") {
    const auto g = make_complete(4);
    CHECK(g.total_capacity() == 6);
    CHECK(brute_force_min_cut(g).value == 3);
}

TEST_CASE("planted generator reports a brute-force-minimum cut") {
    RandomSource rng(5);
    PlantedSpec spec;  // 4+4, intra 10, inter 1, 2 crossing edges
    const auto planted = make_planted(spec, rng);
    CHECK(planted.planted_cut.value == 2);
    CHECK(cut_value(planted.graph, planted.planted_cut.side) == 2);
    const Cut oracle = brute_force_min_cut(planted.graph);
    CHECK(oracle.value == planted.planted_cut.value);
    CHECK(same_partition(oracle.side, planted.planted_cut.side, 8));
}

TEST_CASE("planted generator rejects non-minimum plants") {
    RandomSource rng(5);
    PlantedSpec spec;
    spec.intra = 1;
    spec.inter = 5;
    CHECK_THROWS_WITH_AS(make_planted(spec, rng), doctest::Contains("minimum"), InvalidArgument);
}

TEST_CASE("random generator is connected with capacities in range") {
    RandomSource rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = make_random_connected(12, 0.3, 2, 9, rng);
        CHECK(g.connected());
        for (int a = 0; a < 12; ++a)
            for (int b = a + 1; b < 12; ++b) {
                const auto w = g.capacity(a, b);
                if (w != 0) {
                    CHECK(w >= 2);
                    CHECK(w <= 9);
                }
            }
    }
}

TEST_CASE("random generator gives up after bounded retries") {
    RandomSource rng(9);
    CHECK_THROWS_AS(make_random_connected(40, 1e-6, 1, 1, rng, 5), GraphError);
}

TEST_CASE("unit cycle detection") {
    CHECK(is_unit_cycle(make_cycle(8)));
    CHECK_FALSE(is_unit_cycle(make_complete(4)));
    std::vector<EdgeSpec<long long>> heavy{{0, 1, 2}, {1, 2, 2}, {0, 2, 2}};
    CHECK_FALSE(is_unit_cycle(build_graph(3, heavy)));
    auto contracted = make_cycle(6);
    contracted.contract(0, 1);
    CHECK_FALSE(is_unit_cycle(contracted));
}
