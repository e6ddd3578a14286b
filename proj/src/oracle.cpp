#include "maxgenus/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxgenus/errors.hpp"

namespace maxgenus {

namespace {

// Union-find with explicit rollback so include branches can be undone.
struct RollbackDsu {
    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    // Returns the child root absorbed, or -1 if already joined.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return -1;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return b;
    }
    void undo(int child) {
        if (child < 0) return;
        size[find(child)] -= size[child];
        parent[child] = child;
    }
    std::vector<int> parent;
    std::vector<int> size;
};

struct TreeEnumerator {
    const Multigraph& g;
    const OracleBudget& budget;
    const std::function<void(const EdgeSubset&)>& emit;
    RollbackDsu dsu;
    EdgeSubset chosen;
    uint64_t count = 0;

    TreeEnumerator(const Multigraph& g, const OracleBudget& budget,
                   const std::function<void(const EdgeSubset&)>& emit)
        : g(g), budget(budget), emit(emit), dsu(g.vertex_count()),
          chosen(g.edge_count()) {}

    // True iff the edges with id >= from, together with what is already
    // contracted, connect everything.
    bool connectable(int from) const {
        RollbackDsu probe = dsu;
        int comps = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (probe.find(v) == v) ++comps;
        for (int e = from; e < g.edge_count() && comps > 1; ++e)
            if (probe.unite(g.edge(e).u, g.edge(e).v) >= 0) --comps;
        return comps == 1;
    }

    void run(int edge_idx, int comps_left) {
        if (comps_left == 1) {
            if (++count > budget.max_trees)
                throw BudgetExceeded(
                    "spanning tree enumeration exceeded max_trees=" +
                    std::to_string(budget.max_trees));
            emit(chosen);
            return;
        }
        if (edge_idx >= g.edge_count()) return;

        const Edge& e = g.edge(edge_idx);
        if (dsu.find(e.u) == dsu.find(e.v)) {
            // loop or already-connected pair: never a tree edge here
            run(edge_idx + 1, comps_left);
            return;
        }

        int undo = dsu.unite(e.u, e.v);
        chosen.set(edge_idx);
        run(edge_idx + 1, comps_left - 1);
        chosen.reset(edge_idx);
        dsu.undo(undo);

        if (connectable(edge_idx + 1)) run(edge_idx + 1, comps_left);
    }
};

}  // namespace

void for_each_spanning_tree(const Multigraph& g, const OracleBudget& budget,
                            const std::function<void(const EdgeSubset&)>& fn) {
    if (g.vertex_count() > budget.max_vertices)
        throw BudgetExceeded("graph has " + std::to_string(g.vertex_count()) +
                             " vertices, budget allows " +
                             std::to_string(budget.max_vertices));
    if (g.edge_count() > budget.max_edges)
        throw BudgetExceeded("graph has " + std::to_string(g.edge_count()) +
                             " edges, budget allows " +
                             std::to_string(budget.max_edges));
    if (!is_connected(g))
        throw DisconnectedGraph("for_each_spanning_tree: graph is disconnected");

    TreeEnumerator en(g, budget, fn);
    en.run(0, g.vertex_count());
}

XiOracleResult xi_oracle(const Multigraph& g, const OracleBudget& budget) {
    int best = -1;
    EdgeSubset best_tree;
    uint64_t total = 0;
    for_each_spanning_tree(g, budget, [&](const EdgeSubset& tree_edges) {
        ++total;
        SpanningTree t = tree_from_edges(g, tree_edges);
        int xi = xi_of_tree(g, t);
        if (best < 0 || xi < best) {
            best = xi;
            best_tree = tree_edges;
        }
    });
    return {best, tree_from_edges(g, best_tree), total};
}

int genus_oracle(const Multigraph& g, const OracleBudget& budget) {
    XiOracleResult r = xi_oracle(g, budget);
    return (betti(g) - r.xi) / 2;
}

namespace {

struct MatchingSearch {
    const SimpleGraph& h;
    std::vector<char> used;
    int best = 0;

    explicit MatchingSearch(const SimpleGraph& h) : h(h), used(h.n, 0) {}

    void run(int v, int matched, int free_left) {
        best = std::max(best, matched);
        // even a perfect pairing of what's free cannot beat best
        if (matched + free_left / 2 <= best) return;
        while (v < h.n && used[v]) ++v;
        if (v >= h.n) return;

        used[v] = 1;
        for (int w : h.adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            run(v + 1, matched + 1, free_left - 2);
            used[w] = 0;
        }
        // leave v unmatched
        run(v + 1, matched, free_left - 1);
        used[v] = 0;
    }
};

}  // namespace

int matching_oracle(const SimpleGraph& h, const OracleBudget& budget) {
    int cap = std::max(budget.max_vertices, 14);  // default budget admits 14
    if (h.n > cap)
        throw BudgetExceeded("matching_oracle: graph has " +
                             std::to_string(h.n) + " vertices, cap is " +
                             std::to_string(cap));
    MatchingSearch search(h);
    search.run(0, 0, h.n);
    return search.best;
}

}  // namespace maxgenus
