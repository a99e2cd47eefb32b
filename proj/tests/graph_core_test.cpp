#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "oddspec/errors.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/graph6.hpp"
#include "test_util.hpp"

using namespace oddspec;

TEST_CASE("graph basics: edges are deduplicated and undirected") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(1) == std::vector<int>{0});
    const auto e = g.edges();
    CHECK(e == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(2, 2), invalid_parameter);
    CHECK_THROWS_AS(g.add_edge(0, 4), invalid_parameter);
    CHECK_THROWS_AS(Graph(-1), invalid_parameter);
}

TEST_CASE("cycle and complete generators") {
    const Graph c5 = generate_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.has_edge(4, 0));

    const Graph k6 = generate_complete(6);
    CHECK(k6.edge_count() == 15);
    for (int v = 0; v < 6; ++v) CHECK(k6.degree(v) == 5);

    CHECK_THROWS_AS(generate_cycle(2), invalid_parameter);
    CHECK_THROWS_AS(generate_complete(0), invalid_parameter);
}

TEST_CASE("hypercube and folded cube") {
    const Graph q4 = generate_hypercube(4);
    CHECK(q4.vertex_count() == 16);
    CHECK(q4.edge_count() == 32);
    CHECK(is_bipartite(q4));

    // folding Q_d adds the all-ones difference: d-regular on 2^(d-1) vertices
    const Graph f7 = generate_folded_cube(7);
    CHECK(f7.vertex_count() == 64);
    CHECK(f7.edge_count() == 224);
    for (int v = 0; v < 64; ++v) CHECK(f7.degree(v) == 7);
    CHECK(!is_bipartite(f7));

    const Graph f5 = generate_folded_cube(5);
    CHECK(f5.vertex_count() == 16);
    for (int v = 0; v < 16; ++v) CHECK(f5.degree(v) == 5);

    // d = 2 folds onto K_2: the all-ones word coincides with a generator
    const Graph f2 = generate_folded_cube(2);
    CHECK(f2.vertex_count() == 2);
    CHECK(f2.edge_count() == 1);
    CHECK_THROWS_AS(generate_folded_cube(1), invalid_parameter);
}

TEST_CASE("cayley generators match the explicit cube constructions") {
    const Graph direct = generate_cayley_f2(3, {1, 2, 4});
    CHECK(direct == generate_hypercube(3));
    const Graph folded = generate_cayley_f2(6, {1, 2, 4, 8, 16, 32, 63});
    CHECK(folded == generate_folded_cube(7));
    CHECK_THROWS_AS(generate_cayley_f2(3, {0}), invalid_parameter);
    CHECK_THROWS_AS(generate_cayley_f2(3, {8}), invalid_parameter);
    CHECK_THROWS_AS(generate_cayley_f2(15, {1}), capacity_exceeded);
}

TEST_CASE("odd girth on known graphs") {
    CHECK(odd_girth(generate_cycle(7)).value() == 7);
    CHECK(odd_girth(generate_cycle(15)).value() == 15);
    CHECK(odd_girth(generate_cycle(6)).is_infinite());
    CHECK(odd_girth(generate_complete(4)).value() == 3);
    CHECK(odd_girth(generate_folded_cube(7)).value() == 7);
    CHECK(odd_girth(generate_folded_cube(5)).value() == 5);
    CHECK(odd_girth(generate_hypercube(3)).is_infinite());
    CHECK(odd_girth(Graph(1)).is_infinite());
}

TEST_CASE("odd girth agrees with the double-cover oracle on random graphs") {
    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = testutil::random_graph(rng, n, 0.15 + 0.5 * (trial % 3));
        const int oracle = testutil::odd_girth_oracle(g);
        const OddGirth og = odd_girth(g);
        if (oracle == 0) {
            CHECK(og.is_infinite());
        } else {
            CHECK(og.value() == oracle);
        }
        CHECK(is_bipartite(g) == og.is_infinite());
        CHECK(og.at_least(3));
        if (!og.is_infinite()) CHECK(!og.at_least(og.value() + 2));
    }
}

TEST_CASE("OddGirth value objects") {
    CHECK_THROWS_AS(OddGirth::infinite().value(), invalid_parameter);
    CHECK_THROWS_AS(OddGirth::finite(4), invalid_parameter);
    CHECK_THROWS_AS(OddGirth::finite(1), invalid_parameter);
    CHECK(OddGirth::finite(9).at_least(9));
    CHECK(!OddGirth::finite(9).at_least(11));
    CHECK(OddGirth::infinite().at_least(999));
}

TEST_CASE("connected components are sorted vertex lists") {
    Graph g(6);
    g.add_edge(0, 3);
    g.add_edge(3, 5);
    g.add_edge(1, 4);
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 3, 5});
    CHECK(comps[1] == std::vector<int>{1, 4});
    CHECK(comps[2] == std::vector<int>{2});
    CHECK(connected_components(generate_cycle(5)).size() == 1);
}

TEST_CASE("independent set predicate") {
    const Graph c6 = generate_cycle(6);
    CHECK(is_independent_set(c6, {0, 2, 4}));
    CHECK(!is_independent_set(c6, {0, 1}));
    CHECK(is_independent_set(c6, {}));
    CHECK(is_independent_set(c6, {0, 0}));  // duplicates are not edges
    CHECK_THROWS_AS(is_independent_set(c6, {6}), invalid_parameter);
    CHECK_THROWS_AS(is_independent_set(c6, {-1}), invalid_parameter);
}

TEST_CASE("d2_oracle equals brute-force edge bipartization distance") {
    CHECK(d2_oracle(generate_cycle(5)) == 1);
    CHECK(d2_oracle(generate_cycle(6)) == 0);
    CHECK(d2_oracle(generate_complete(4)) == 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = testutil::random_graph(rng, n, 0.4);
        CHECK(d2_oracle(g) == testutil::d2_brute(g));
    }
    CHECK_THROWS_AS(d2_oracle(Graph(30)), capacity_exceeded);
}

TEST_CASE("graph6 encodes the canonical small forms") {
    // 5-vertex star with center 4: upper-triangle bits set only on column 4
    const Graph star = parse_graph6("D?{");
    REQUIRE(star.vertex_count() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(4) == 4);
    for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));
    CHECK(!star.has_edge(0, 1));

    CHECK(write_graph6(star) == "D?{");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(write_graph6(generate_complete(3)) == "Bw");
}

TEST_CASE("graph6 round-trips across all three length forms") {
    std::mt19937 rng(99);
    for (int n : {1, 2, 5, 30, 62, 63, 64, 100, 200}) {
        const Graph g = testutil::random_graph(rng, n, 0.3);
        const Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
    // n >= 63 switches to the long form, n >= 258048 to the extra-long form
    CHECK(write_graph6(Graph(63)).substr(0, 1) == "~");
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("byte"), parse_error);
    CHECK_THROWS_AS(parse_graph6("D?{{"), parse_error);   // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D?\x7f"), parse_error); // byte out of range
    CHECK_THROWS_AS(parse_graph6("D?\x1f"), parse_error);
    CHECK_THROWS_AS(parse_graph6("~"), parse_error);      // truncated long form
}

TEST_CASE("read_graph6_lines handles headers, blank lines, and CRLF") {
    const std::string text = ">>graph6<<D?{\r\n\r\nBw\nD?{\n";
    const auto jobs = read_graph6_lines(text);
    REQUIRE(jobs.size() == 3);
    CHECK(jobs[0].first == 1);
    CHECK(jobs[1].first == 3);
    CHECK(jobs[2].first == 4);
    CHECK(jobs[0].second == "D?{");
    CHECK(jobs[1].second == "Bw");
}
