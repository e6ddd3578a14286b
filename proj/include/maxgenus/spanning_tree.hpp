#pragma once

#include <cstdint>
#include <vector>

#include "maxgenus/multigraph.hpp"

namespace maxgenus {

enum class TreeStrategy {
    DeterministicDfs,  // root 0, incident edges tried in ascending edge id
    SeededRandom,      // DFS with a seeded random edge-priority order
};

struct SpanningTree {
    EdgeSubset tree_edges;              // exactly n-1 bits set
    VertexId root = 0;
    std::vector<VertexId> parent;       // -1 at the root
    std::vector<EdgeId> parent_edge;    // -1 at the root
    std::vector<int> depth;
};

// The cycle closed by one co-tree edge: that edge plus the tree path
// between its endpoints. A loop closes a cycle by itself.
struct FundamentalCycle {
    EdgeId cotree_edge;
    EdgeSubset cycle_edges;
    Bitset vertex_set;                  // over vertex ids
    std::vector<VertexId> vertices;     // ascending
};

// Throws DisconnectedGraph. Deterministic for the DFS strategy; for
// SeededRandom the same seed always yields the same tree.
SpanningTree spanning_tree(const Multigraph& g, TreeStrategy strategy,
                           uint64_t seed = 0);

// Rebuilds the rooted structure from an explicit tree edge set.
// Throws std::invalid_argument if the edges do not form a spanning tree.
SpanningTree tree_from_edges(const Multigraph& g, const EdgeSubset& tree_edges);

// One cycle per co-tree edge, in ascending co-tree edge id order;
// exactly betti(g) of them.
std::vector<FundamentalCycle> fundamental_cycles(const Multigraph& g,
                                                 const SpanningTree& t);

// Cycle the edge (u, v) would close through t if added to the graph.
// The edge itself is not part of the result's edge set (it has no id yet);
// cycle_edges holds only the tree path, cotree_edge is -1.
FundamentalCycle cycle_through_tree(const Multigraph& g, const SpanningTree& t,
                                    VertexId u, VertexId v);

// Number of odd-edge-count components of the co-tree edge set.
int xi_of_tree(const Multigraph& g, const SpanningTree& t);

}  // namespace maxgenus
