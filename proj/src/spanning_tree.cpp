#include "maxgenus/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "maxgenus/errors.hpp"
#include "maxgenus/rng.hpp"

namespace maxgenus {

namespace {

// DFS from vertex 0 trying each vertex's incident edges in the given order.
SpanningTree dfs_tree(const Multigraph& g,
                      const std::vector<std::vector<Multigraph::Incidence>>& order) {
    int n = g.vertex_count();
    SpanningTree t;
    t.tree_edges = EdgeSubset(g.edge_count());
    t.root = 0;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.depth.assign(n, 0);

    std::vector<char> visited(n, 0);
    std::vector<std::pair<VertexId, size_t>> stack;
    visited[0] = 1;
    stack.push_back({0, 0});
    int reached = 1;

    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        bool descended = false;
        while (idx < order[v].size()) {
            const auto& inc = order[v][idx++];
            if (visited[inc.other]) continue;
            visited[inc.other] = 1;
            ++reached;
            t.tree_edges.set(inc.edge);
            t.parent[inc.other] = v;
            t.parent_edge[inc.other] = inc.edge;
            t.depth[inc.other] = t.depth[v] + 1;
            stack.push_back({inc.other, 0});
            descended = true;
            break;
        }
        if (!descended) stack.pop_back();
    }
    if (reached != n)
        throw DisconnectedGraph("spanning_tree: graph is disconnected");
    return t;
}

}  // namespace

SpanningTree spanning_tree(const Multigraph& g, TreeStrategy strategy,
                           uint64_t seed) {
    if (g.vertex_count() == 0)
        throw DisconnectedGraph("spanning_tree: empty graph");

    std::vector<std::vector<Multigraph::Incidence>> order(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) order[v] = g.incident(v);

    if (strategy == TreeStrategy::SeededRandom) {
        Rng rng(seed);
        std::vector<int> priority(g.edge_count());
        std::iota(priority.begin(), priority.end(), 0);
        shuffle_inplace(priority, rng);
        for (auto& lst : order)
            std::sort(lst.begin(), lst.end(),
                      [&](const auto& a, const auto& b) {
                          return priority[a.edge] < priority[b.edge];
                      });
    }
    return dfs_tree(g, order);
}

SpanningTree tree_from_edges(const Multigraph& g, const EdgeSubset& tree_edges) {
    int n = g.vertex_count();
    if (tree_edges.count() != n - 1)
        throw std::invalid_argument("tree_from_edges: need exactly n-1 edges");

    std::vector<std::vector<Multigraph::Incidence>> adj(n);
    tree_edges.for_each([&](int e) {
        adj[g.edge(e).u].push_back({e, g.edge(e).v});
        if (!g.edge(e).is_loop()) adj[g.edge(e).v].push_back({e, g.edge(e).u});
    });

    SpanningTree t;
    t.tree_edges = tree_edges;
    t.root = 0;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.depth.assign(n, 0);

    std::vector<char> visited(n, 0);
    std::vector<VertexId> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& inc : adj[v]) {
            if (visited[inc.other]) continue;
            visited[inc.other] = 1;
            ++reached;
            t.parent[inc.other] = v;
            t.parent_edge[inc.other] = inc.edge;
            t.depth[inc.other] = t.depth[v] + 1;
            stack.push_back(inc.other);
        }
    }
    if (reached != n)
        throw std::invalid_argument("tree_from_edges: edges do not span");
    return t;
}

FundamentalCycle cycle_through_tree(const Multigraph& g, const SpanningTree& t,
                                    VertexId u, VertexId v) {
    FundamentalCycle c;
    c.cotree_edge = -1;
    c.cycle_edges = EdgeSubset(g.edge_count());
    c.vertex_set = Bitset(g.vertex_count());

    if (u == v) {
        c.vertex_set.set(u);
        c.vertices = {u};
        return c;
    }

    // Walk both endpoints to their lowest common ancestor.
    VertexId a = u, b = v;
    while (a != b) {
        if (t.depth[a] >= t.depth[b]) {
            c.vertex_set.set(a);
            c.cycle_edges.set(t.parent_edge[a]);
            a = t.parent[a];
        } else {
            c.vertex_set.set(b);
            c.cycle_edges.set(t.parent_edge[b]);
            b = t.parent[b];
        }
    }
    c.vertex_set.set(a);
    c.vertices = c.vertex_set.to_vector();
    return c;
}

std::vector<FundamentalCycle> fundamental_cycles(const Multigraph& g,
                                                 const SpanningTree& t) {
    std::vector<FundamentalCycle> cycles;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (t.tree_edges.test(e)) continue;
        FundamentalCycle c = cycle_through_tree(g, t, g.edge(e).u, g.edge(e).v);
        c.cotree_edge = e;
        c.cycle_edges.set(e);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

int xi_of_tree(const Multigraph& g, const SpanningTree& t) {
    EdgeSubset cotree = t.tree_edges.complement();
    int odd = 0;
    for (const EdgeSubset& comp : components_of_subset(g, cotree))
        if (comp.count() % 2 == 1) ++odd;
    return odd;
}

}  // namespace maxgenus
