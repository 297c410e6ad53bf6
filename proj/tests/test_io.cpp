#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "mincut/generate.hpp"
#include "mincut/io.hpp"

using namespace mincut;

TEST_CASE("parses a minimal graph") {
    const auto g = parse_graph("2 1\n0 1 5\n");
    CHECK(g.size() == 2);
    CHECK(g.total_capacity() == 5);
}

TEST_CASE("serializes the unit triangle canonically") {
    CHECK(serialize_graph(make_cycle(3)) == "3 3\n0 1 1\n0 2 1\n1 2 1\n");
}

TEST_CASE("round-trips are the identity") {
    RandomSource rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(10));
        const auto g = make_random_connected(n, 0.5, 1, 50, rng);
        const std::string text = serialize_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("comments are skipped and do not count toward m") {
    const auto g = parse_graph("# a comment\n3 2\n# another\n0 1 1\n1 2 4\n");
    CHECK(g.capacity(1, 2) == 4);
}

TEST_CASE("parse errors carry the offending line number") {
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 3 1\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 3 1\n"), doctest::Contains("out of range"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph(""), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("x y\n"), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3\n"), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("1 0\n"), doctest::Contains("at least 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1 1\n"), doctest::Contains("wrong edge count"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 1\n0 1 1\n"),
                         doctest::Contains("wrong edge count"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 -4\n"), doctest::Contains("negative"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 1 3\n"), doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 0 3\n"), doctest::Contains("u < v"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1\n"), doctest::Contains("u v w"), ParseError);
}

TEST_CASE("serialize refuses contracted graphs") {
    auto g = make_cycle(4);
    g.contract(0, 1);
    CHECK_THROWS_AS(serialize_graph(g), InvalidArgument);
}

TEST_CASE("file helpers round-trip and report missing files") {
    const std::string path = "io_test_tmp.graph";
    const auto g = make_complete(5);
    save_graph_file(g, path);
    CHECK(load_graph_file(path) == g);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_graph_file("does_not_exist.graph"), InvalidArgument);
}
