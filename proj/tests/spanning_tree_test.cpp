#include <algorithm>

#include "doctest.h"

#include "maxgenus/errors.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/spanning_tree.hpp"
#include "test_support.hpp"

using namespace maxgenus;
namespace ts = maxgenus::testsupport;

namespace {

// every cycle vertex has degree 2 within the cycle edges, except the
// single-loop cycle
bool cycle_is_closed(const Multigraph& g, const FundamentalCycle& c) {
    if (c.cycle_edges.count() == 1 && g.edge(c.cotree_edge).is_loop())
        return c.vertices.size() == 1;
    std::vector<int> deg(g.vertex_count(), 0);
    c.cycle_edges.for_each([&](int e) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    });
    for (VertexId v : c.vertices)
        if (deg[v] != 2) return false;
    int touched = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 0) ++touched;
    return touched == static_cast<int>(c.vertices.size());
}

}  // namespace

TEST_SUITE("spanning_tree") {

TEST_CASE("a tree is its own spanning tree") {
    Multigraph g = path_graph(5);
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    CHECK(t.tree_edges.count() == 5);
    CHECK(fundamental_cycles(g, t).empty());
}

TEST_CASE("C4 deterministic dfs takes the three lowest edges") {
    Multigraph g = cycle_graph(4);
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    CHECK(t.tree_edges.to_vector() == std::vector<int>{0, 1, 2});
}

TEST_CASE("K4 deterministic dfs leaves a cotree of size betti") {
    Multigraph g = complete_graph(4);
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    CHECK(t.tree_edges.count() == 3);
    CHECK(fundamental_cycles(g, t).size() == 3);
}

TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(
        spanning_tree(Multigraph(3, {{0, 1}}), TreeStrategy::DeterministicDfs),
        DisconnectedGraph);
}

TEST_CASE("loop cycle is the loop alone") {
    Multigraph g(2, {{0, 1}, {1, 1}});
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    auto cycles = fundamental_cycles(g, t);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].cotree_edge == 1);
    CHECK(cycles[0].cycle_edges.to_vector() == std::vector<int>{1});
    CHECK(cycles[0].vertices == std::vector<VertexId>{1});
}

TEST_CASE("C4 with a path tree gives one full-length cycle") {
    Multigraph g = cycle_graph(4);
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    auto cycles = fundamental_cycles(g, t);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].cycle_edges.count() == 4);
    CHECK(cycles[0].vertices.size() == 4);
}

TEST_CASE("K4 with a star tree gives three triangles through the hub") {
    // hand enumeration: star paths i-0-j plus chord (i, j)
    Multigraph g = complete_graph(4);  // edges (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    EdgeSubset star(6);
    star.set(0);
    star.set(1);
    star.set(2);
    SpanningTree t = tree_from_edges(g, star);
    auto cycles = fundamental_cycles(g, t);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(cycles[1].vertices == std::vector<VertexId>{0, 1, 3});
    CHECK(cycles[2].vertices == std::vector<VertexId>{0, 2, 3});
    for (const auto& c : cycles) CHECK(c.cycle_edges.count() == 3);
}

TEST_CASE("parallel edge closes a two-edge cycle") {
    Multigraph g(2, {{0, 1}, {0, 1}});
    SpanningTree t = spanning_tree(g, TreeStrategy::DeterministicDfs);
    auto cycles = fundamental_cycles(g, t);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].cycle_edges.count() == 2);
    CHECK(cycles[0].vertices.size() == 2);
}

TEST_CASE("xi_of_tree examples") {
    Multigraph path = path_graph(4);
    CHECK(xi_of_tree(path, spanning_tree(path, TreeStrategy::DeterministicDfs)) == 0);

    Multigraph c5 = cycle_graph(5);
    CHECK(xi_of_tree(c5, spanning_tree(c5, TreeStrategy::DeterministicDfs)) == 1);

    Multigraph db = dumbbell();
    CHECK(xi_of_tree(db, spanning_tree(db, TreeStrategy::DeterministicDfs)) == 2);
}

TEST_CASE("every fundamental cycle is closed and has one cotree edge") {
    for (const Multigraph& g : ts::corpus_graphs(25)) {
        SpanningTree t = spanning_tree(g, TreeStrategy::SeededRandom, 42);
        auto cycles = fundamental_cycles(g, t);
        int cotree_hits = 0;
        for (const auto& c : cycles) {
            CHECK(cycle_is_closed(g, c));
            int non_tree = 0;
            c.cycle_edges.for_each([&](int e) {
                if (!t.tree_edges.test(e)) ++non_tree;
            });
            CHECK(non_tree == 1);
            cotree_hits += non_tree;
        }
        CHECK(cotree_hits == static_cast<int>(cycles.size()));
    }
}

TEST_CASE("xi has the parity of betti for any tree") {
    for (const Multigraph& g : ts::corpus_graphs(25)) {
        int beta = g.edge_count() - g.vertex_count() + 1;
        for (uint64_t seed = 0; seed < 8; ++seed) {
            SpanningTree t = spanning_tree(g, TreeStrategy::SeededRandom, seed);
            CHECK(xi_of_tree(g, t) % 2 == beta % 2);
        }
    }
}

TEST_CASE("deterministic dfs is reproducible") {
    for (const Multigraph& g : ts::corpus_graphs(10)) {
        SpanningTree a = spanning_tree(g, TreeStrategy::DeterministicDfs);
        SpanningTree b = spanning_tree(g, TreeStrategy::DeterministicDfs);
        CHECK(a.tree_edges == b.tree_edges);
    }
}

TEST_CASE("seeded random trees are seed-deterministic and diverse") {
    Multigraph g = complete_graph(5);
    SpanningTree a = spanning_tree(g, TreeStrategy::SeededRandom, 9);
    SpanningTree b = spanning_tree(g, TreeStrategy::SeededRandom, 9);
    CHECK(a.tree_edges == b.tree_edges);

    std::vector<std::vector<int>> seen;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto t = spanning_tree(g, TreeStrategy::SeededRandom, seed);
        seen.push_back(t.tree_edges.to_vector());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen.size() > 3);  // many distinct trees across seeds
}

TEST_CASE("tree_from_edges validates its input") {
    Multigraph g = complete_graph(4);
    EdgeSubset not_spanning(6);
    not_spanning.set(0);
    not_spanning.set(1);
    CHECK_THROWS_AS(tree_from_edges(g, not_spanning), std::invalid_argument);

    EdgeSubset cyclic(6);
    cyclic.set(0);  // (0,1)
    cyclic.set(3);  // (1,2)
    cyclic.set(1);  // (0,2) closes a triangle, vertex 3 unreached
    CHECK_THROWS_AS(tree_from_edges(g, cyclic), std::invalid_argument);
}

}  // TEST_SUITE
