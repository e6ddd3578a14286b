#pragma once

#include <utility>
#include <vector>

#include "maxgenus/matching.hpp"
#include "maxgenus/spanning_tree.hpp"

namespace maxgenus {

// Simple graph on the fundamental cycles of one spanning tree: cycle i and
// cycle j are adjacent iff they share at least one graph vertex.
struct IntersectionGraph {
    int n_cycles = 0;
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    std::vector<std::pair<int, int>> edges;  // i < j, lexicographic
    std::vector<FundamentalCycle> source_cycles;

    SimpleGraph as_simple_graph() const;
};

// OpenMP kernel: pair tests are independent, rows are filled in parallel.
// Output is identical to the serial reference for any thread count.
IntersectionGraph build_intersection_graph(std::vector<FundamentalCycle> cycles);

// Serial reference, kept for testing and benchmarking against the kernel.
IntersectionGraph build_intersection_graph_serial(
    std::vector<FundamentalCycle> cycles);

// True iff the graph is complete (vacuously true for 0 or 1 cycles).
bool pairwise_intersecting(const IntersectionGraph& igraph);

// Smallest vertex id two cycles share, or -1.
VertexId common_vertex(const FundamentalCycle& a, const FundamentalCycle& b);

}  // namespace maxgenus
