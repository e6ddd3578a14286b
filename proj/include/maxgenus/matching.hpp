#pragma once

#include <utility>
#include <vector>

namespace maxgenus {

// Simple undirected graph for the matching step. No loops, no parallel
// edges; callers are expected to construct it that way.
struct SimpleGraph {
    explicit SimpleGraph(int n = 0) : n(n), adj(n) {}

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.push_back({u, v});
    }

    int n;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b, sorted
    int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum-cardinality matching by augmenting-path search with odd-cycle
// (blossom) contraction. Deterministic: a greedy pass over edges in
// ascending order seeds the matching, then free vertices are scanned in
// ascending index and the first augmenting path found is applied.
Matching max_matching(const SimpleGraph& h);

}  // namespace maxgenus
