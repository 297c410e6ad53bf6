#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mincut/generate.hpp"
#include "mincut/oracle.hpp"

using namespace mincut;

TEST_CASE("brute force on the small standards") {
    std::vector<EdgeSpec<long long>> path_edges{{0, 1, 1}, {1, 2, 1}};
    const auto path = build_graph(3, path_edges);
    CHECK(brute_force_min_cut(path).value == 1);
    // tie between {0} and {0,1}: smallest side bitmask wins
    CHECK(brute_force_min_cut(path).side == std::vector<VertexId>{0});

    CHECK(brute_force_min_cut(make_complete(4)).value == 3);
    CHECK(brute_force_min_cut(make_cycle(5)).value == 2);
    CHECK(enumerate_min_cuts(make_cycle(5)).size() == 10);
}

TEST_CASE("cycle minimum cuts number n(n-1)/2") {
    for (int n = 3; n <= 12; ++n) {
        const auto cuts = enumerate_min_cuts(make_cycle(n));
        CHECK(cuts.size() == static_cast<std::size_t>(n) * (n - 1) / 2);
        for (const auto& cut : cuts) CHECK(cut.value == 2);
    }
}

TEST_CASE("path and K4 enumerations") {
    std::vector<EdgeSpec<long long>> path_edges{{0, 1, 1}, {1, 2, 1}};
    const auto path = build_graph(3, path_edges);
    const auto path_cuts = enumerate_min_cuts(path);
    REQUIRE(path_cuts.size() == 2);
    CHECK(path_cuts[0].value == 1);
    CHECK(path_cuts[1].value == 1);

    const auto k4_cuts = enumerate_min_cuts(make_complete(4));
    CHECK(k4_cuts.size() == 4);
}

TEST_CASE("deterministic and exhaustive oracles agree on 200 random graphs") {
    RandomSource rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(9));
        const auto g = make_random_connected(n, 0.5, 1, 10, rng);
        const Cut brute = brute_force_min_cut(g);
        const Cut det = deterministic_min_cut(g);
        CHECK(brute.value == det.value);
        CHECK(cut_value(g, det.side) == det.value);
        CHECK(cut_value(g, brute.side) == brute.value);
    }
}

TEST_CASE("deterministic oracle on larger inputs") {
    CHECK(deterministic_min_cut(make_cycle(100)).value == 2);
    RandomSource rng(99);
    PlantedSpec spec;
    spec.size_a = 6;
    spec.size_b = 5;
    const auto planted = make_planted(spec, rng);
    const Cut det = deterministic_min_cut(planted.graph);
    CHECK(det.value == planted.planted_cut.value);
    CHECK(same_partition(det.side, planted.planted_cut.side, planted.graph.original_size()));
}

TEST_CASE("sharded sweep equals the serial reference") {
    RandomSource rng(55);
    const auto g = make_random_connected(17, 0.4, 1, 20, rng);
    const Cut serial = brute_force_min_cut(g, 1);
    const Cut sharded = brute_force_min_cut(g, 8);
    CHECK(serial.value == sharded.value);
    CHECK(serial.side == sharded.side);
    CHECK(enumerate_min_cuts(g, 1).size() == enumerate_min_cuts(g, 8).size());
}

TEST_CASE("oracle error paths") {
    RandomSource rng(3);
    const auto big = make_random_connected(25, 0.5, 1, 5, rng);
    CHECK_THROWS_WITH_AS(brute_force_min_cut(big), doctest::Contains("deterministic_min_cut"),
                         InvalidArgument);
    CHECK_THROWS_AS(enumerate_min_cuts(big), InvalidArgument);

    std::vector<EdgeSpec<long long>> split{{0, 1, 1}, {2, 3, 1}};
    const auto disconnected = build_graph(4, split);
    CHECK_THROWS_WITH_AS(deterministic_min_cut(disconnected), doctest::Contains("disconnected"),
                         GraphError);
}

TEST_CASE("oracles work on contracted graphs") {
    auto g = make_cycle(8);
    g.contract(0, 1);
    g.contract(2, 3);
    const Cut brute = brute_force_min_cut(g);
    const Cut det = deterministic_min_cut(g);
    CHECK(brute.value == 2);
    CHECK(det.value == 2);
}
