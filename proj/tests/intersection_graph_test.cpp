#include <algorithm>

#include "doctest.h"

#include "maxgenus/generators.hpp"
#include "maxgenus/intersection_graph.hpp"
#include "test_support.hpp"

using namespace maxgenus;
namespace ts = maxgenus::testsupport;

namespace {

IntersectionGraph gm_of(const Multigraph& g, uint64_t seed = 0,
                        bool random_tree = false) {
    SpanningTree t = spanning_tree(
        g, random_tree ? TreeStrategy::SeededRandom : TreeStrategy::DeterministicDfs,
        seed);
    return build_intersection_graph(fundamental_cycles(g, t));
}

}  // namespace

TEST_SUITE("intersection_graph") {

TEST_CASE("a tree has an empty intersection graph") {
    IntersectionGraph ig = gm_of(path_graph(4));
    CHECK(ig.n_cycles == 0);
    CHECK(ig.edges.empty());
}

TEST_CASE("K4 star tree cycles form a triangle") {
    Multigraph g = complete_graph(4);
    EdgeSubset star(6);
    star.set(0);
    star.set(1);
    star.set(2);
    auto cycles = fundamental_cycles(g, tree_from_edges(g, star));
    IntersectionGraph ig = build_intersection_graph(cycles);
    CHECK(ig.n_cycles == 3);
    CHECK(ig.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(pairwise_intersecting(ig));
}

TEST_CASE("dumbbell cycles are disjoint") {
    IntersectionGraph ig = gm_of(dumbbell());
    CHECK(ig.n_cycles == 2);
    CHECK(ig.edges.empty());
    CHECK_FALSE(pairwise_intersecting(ig));
}

TEST_CASE("single cycle is vacuously pairwise intersecting") {
    CHECK(pairwise_intersecting(gm_of(cycle_graph(5))));
}

TEST_CASE("two loops at one vertex are adjacent") {
    IntersectionGraph ig = gm_of(bouquet(2));
    CHECK(ig.n_cycles == 2);
    CHECK(ig.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("vertex count equals betti and adjacency is symmetric") {
    for (const Multigraph& g : ts::corpus_graphs(20)) {
        IntersectionGraph ig = gm_of(g, 5, true);
        CHECK(ig.n_cycles == g.edge_count() - g.vertex_count() + 1);
        for (auto [i, j] : ig.edges) {
            CHECK(std::count(ig.adj[i].begin(), ig.adj[i].end(), j) == 1);
            CHECK(std::count(ig.adj[j].begin(), ig.adj[j].end(), i) == 1);
            CHECK(i < j);
        }
    }
}

TEST_CASE("openmp kernel matches the serial reference") {
    for (const Multigraph& g : ts::corpus_graphs(30)) {
        auto cycles = fundamental_cycles(
            g, spanning_tree(g, TreeStrategy::SeededRandom, 31));
        IntersectionGraph par = build_intersection_graph(cycles);
        IntersectionGraph ser = build_intersection_graph_serial(cycles);
        CHECK(par.edges == ser.edges);
        CHECK(par.adj == ser.adj);
    }
}

TEST_CASE("adjacency is independent of cycle ordering") {
    Multigraph g = complete_graph(5);
    auto cycles = fundamental_cycles(
        g, spanning_tree(g, TreeStrategy::DeterministicDfs));
    IntersectionGraph fwd = build_intersection_graph(cycles);

    std::vector<FundamentalCycle> rev(cycles.rbegin(), cycles.rend());
    IntersectionGraph bwd = build_intersection_graph(rev);
    int k = fwd.n_cycles;
    for (auto [i, j] : fwd.edges) {
        int x = k - 1 - i, y = k - 1 - j;
        std::pair<int, int> mapped{std::min(x, y), std::max(x, y)};
        CHECK(std::find(bwd.edges.begin(), bwd.edges.end(), mapped) !=
              bwd.edges.end());
    }
    CHECK(fwd.edges.size() == bwd.edges.size());
}

TEST_CASE("common_vertex returns the smallest shared id") {
    Multigraph g = complete_graph(4);
    EdgeSubset star(6);
    star.set(0);
    star.set(1);
    star.set(2);
    auto cycles = fundamental_cycles(g, tree_from_edges(g, star));
    // triangles {0,1,2} and {0,1,3} share 0 and 1
    CHECK(common_vertex(cycles[0], cycles[1]) == 0);
    IntersectionGraph disjoint = gm_of(dumbbell());
    CHECK(common_vertex(disjoint.source_cycles[0], disjoint.source_cycles[1]) == -1);
}

}  // TEST_SUITE
