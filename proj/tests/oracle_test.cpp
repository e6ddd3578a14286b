#include "doctest.h"

#include "maxgenus/errors.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/oracle.hpp"
#include "test_support.hpp"

using namespace maxgenus;
namespace ts = maxgenus::testsupport;

TEST_SUITE("oracle") {

TEST_CASE("xi_oracle on small graphs") {
    CHECK(xi_oracle(cycle_graph(6)).xi == 1);

    XiOracleResult db = xi_oracle(dumbbell());
    CHECK(db.xi == 2);
    CHECK(db.trees_enumerated == 9);  // 3 per triangle, bridge forced

    XiOracleResult k4 = xi_oracle(complete_graph(4));
    CHECK(k4.xi == 1);
    CHECK(k4.trees_enumerated == 16);
}

TEST_CASE("the optimal tree attains the minimum") {
    for (const Multigraph& g : ts::corpus_graphs(12)) {
        if (g.vertex_count() > 8 || g.edge_count() > 14) continue;
        XiOracleResult r = xi_oracle(g);
        CHECK(xi_of_tree(g, r.optimal_tree) == r.xi);
    }
}

TEST_CASE("tree counts match the matrix-tree theorem") {
    for (const Multigraph& g : ts::corpus_graphs(20)) {
        if (g.vertex_count() > 8 || g.edge_count() > 14) continue;
        XiOracleResult r = xi_oracle(g);
        CHECK(r.trees_enumerated == ts::kirchhoff_tree_count(g));
    }
}

TEST_CASE("known tree counts") {
    OracleBudget wide{10, 15, 1000000};
    CHECK(xi_oracle(complete_graph(5), wide).trees_enumerated == 125);
    CHECK(xi_oracle(complete_bipartite(3, 3), wide).trees_enumerated == 81);
    CHECK(xi_oracle(generalized_petersen(5, 2), wide).trees_enumerated == 2000);
}

TEST_CASE("genus_oracle") {
    CHECK(genus_oracle(path_graph(3)) == 0);
    CHECK(genus_oracle(complete_graph(4)) == 1);
    OracleBudget wide{10, 15, 1000000};
    CHECK(genus_oracle(complete_bipartite(3, 3), wide) == 2);
}

TEST_CASE("xi parity and the genus bound") {
    for (const Multigraph& g : ts::corpus_graphs(15)) {
        if (g.vertex_count() > 8 || g.edge_count() > 14) continue;
        int beta = g.edge_count() - g.vertex_count() + 1;
        XiOracleResult r = xi_oracle(g);
        CHECK(r.xi % 2 == beta % 2);
        int gamma = (beta - r.xi) / 2;
        CHECK(gamma <= beta / 2);
        CHECK((gamma == beta / 2) == (r.xi <= 1));
    }
}

TEST_CASE("matching_oracle") {
    SimpleGraph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(matching_oracle(k4) == 2);

    SimpleGraph star(6);
    for (int i = 1; i < 6; ++i) star.add_edge(0, i);
    CHECK(matching_oracle(star) == 1);

    SimpleGraph c7(7);
    for (int i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
    CHECK(matching_oracle(c7) == 3);
}

TEST_CASE("budgets are enforced loudly") {
    CHECK_THROWS_AS(xi_oracle(hypercube(4)), BudgetExceeded);

    OracleBudget tight;
    tight.max_trees = 3;
    CHECK_THROWS_AS(xi_oracle(complete_graph(4), tight), BudgetExceeded);

    SimpleGraph big(20);
    CHECK_THROWS_AS(matching_oracle(big), BudgetExceeded);
}

TEST_CASE("oracle rejects disconnected graphs") {
    CHECK_THROWS_AS(xi_oracle(Multigraph(2, {})), DisconnectedGraph);
}

}  // TEST_SUITE
