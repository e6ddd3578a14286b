#include "maxgenus/intersection_graph.hpp"

#include <algorithm>

namespace maxgenus {

SimpleGraph IntersectionGraph::as_simple_graph() const {
    SimpleGraph h(n_cycles);
    for (auto [i, j] : edges) h.add_edge(i, j);
    return h;
}

namespace {

// Rows hold each cycle's higher-indexed neighbors; assembling adjacency and
// the edge list from them is order-independent, so the parallel and serial
// builders produce identical graphs.
IntersectionGraph assemble(std::vector<FundamentalCycle> cycles,
                           std::vector<std::vector<int>> rows) {
    IntersectionGraph ig;
    ig.n_cycles = static_cast<int>(cycles.size());
    ig.adj.assign(ig.n_cycles, {});
    for (int i = 0; i < ig.n_cycles; ++i) {
        for (int j : rows[i]) {
            ig.adj[i].push_back(j);
            ig.adj[j].push_back(i);
            ig.edges.push_back({i, j});
        }
    }
    for (auto& lst : ig.adj) std::sort(lst.begin(), lst.end());
    std::sort(ig.edges.begin(), ig.edges.end());
    ig.source_cycles = std::move(cycles);
    return ig;
}

}  // namespace

IntersectionGraph build_intersection_graph(std::vector<FundamentalCycle> cycles) {
    int k = static_cast<int>(cycles.size());
    std::vector<std::vector<int>> rows(k);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cycles[i].vertex_set.intersects(cycles[j].vertex_set))
                rows[i].push_back(j);
    return assemble(std::move(cycles), std::move(rows));
}

IntersectionGraph build_intersection_graph_serial(
    std::vector<FundamentalCycle> cycles) {
    int k = static_cast<int>(cycles.size());
    std::vector<std::vector<int>> rows(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cycles[i].vertex_set.intersects(cycles[j].vertex_set))
                rows[i].push_back(j);
    return assemble(std::move(cycles), std::move(rows));
}

bool pairwise_intersecting(const IntersectionGraph& igraph) {
    long long k = igraph.n_cycles;
    return static_cast<long long>(igraph.edges.size()) == k * (k - 1) / 2;
}

VertexId common_vertex(const FundamentalCycle& a, const FundamentalCycle& b) {
    auto ai = a.vertices.begin();
    auto bi = b.vertices.begin();
    while (ai != a.vertices.end() && bi != b.vertices.end()) {
        if (*ai == *bi) return *ai;
        if (*ai < *bi) ++ai;
        else ++bi;
    }
    return -1;
}

}  // namespace maxgenus
