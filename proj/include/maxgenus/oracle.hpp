#pragma once

#include <cstdint>
#include <functional>

#include "maxgenus/matching.hpp"
#include "maxgenus/multigraph.hpp"
#include "maxgenus/spanning_tree.hpp"

namespace maxgenus {

// Hard limits for the brute-force oracles. Exceeding any of them raises
// BudgetExceeded; an oracle never truncates silently.
struct OracleBudget {
    int max_vertices = 8;
    int max_edges = 14;
    uint64_t max_trees = 1000000;
};

struct XiOracleResult {
    int xi;                    // min over all spanning trees of xi(G,T)
    SpanningTree optimal_tree; // first tree attaining it, in enumeration order
    uint64_t trees_enumerated;
};

// Exact Betti deficiency by enumerating every spanning tree
// (include/exclude branching on edges with connectivity pruning).
XiOracleResult xi_oracle(const Multigraph& g, const OracleBudget& budget = {});

// (betti - xi) / 2, via xi_oracle.
int genus_oracle(const Multigraph& g, const OracleBudget& budget = {});

// Exact maximum matching size by branch and bound over the vertices.
int matching_oracle(const SimpleGraph& h, const OracleBudget& budget = {});

// Visits every spanning tree's edge set once; enumeration order is
// deterministic. Used by xi_oracle and directly by tests.
void for_each_spanning_tree(const Multigraph& g, const OracleBudget& budget,
                            const std::function<void(const EdgeSubset&)>& fn);

}  // namespace maxgenus
