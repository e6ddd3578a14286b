#include "maxgenus/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "maxgenus/errors.hpp"
#include "maxgenus/rng.hpp"

namespace maxgenus {

Multigraph path_graph(int n_edges) {
    if (n_edges < 0) throw std::invalid_argument("path_graph: negative length");
    std::vector<Edge> edges;
    for (int i = 0; i < n_edges; ++i) edges.push_back({i, i + 1});
    return Multigraph(n_edges + 1, std::move(edges));
}

Multigraph cycle_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle_graph: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite: need both sides >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Multigraph(a + b, std::move(edges));
}

Multigraph bouquet(int loops) {
    if (loops < 0) throw std::invalid_argument("bouquet: negative loop count");
    std::vector<Edge> edges(loops, Edge{0, 0});
    return Multigraph(1, std::move(edges));
}

Multigraph dumbbell() {
    return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

namespace {

void require_simple(const Multigraph& g, const char* who) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) throw NotSimple(std::string(who) + ": factor has a loop");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw NotSimple(std::string(who) + ": factor has parallel edges");
    }
}

}  // namespace

Multigraph cartesian_path_product(const Multigraph& g, int n_edges) {
    if (n_edges < 1)
        throw std::invalid_argument("cartesian_path_product: need n >= 1");
    require_simple(g, "cartesian_path_product");
    if (!is_connected(g))
        throw DisconnectedGraph("cartesian_path_product: factor disconnected");

    int base = g.vertex_count();
    std::vector<Edge> edges;
    for (int layer = 0; layer <= n_edges; ++layer)
        for (const Edge& e : g.edges())
            edges.push_back({layer * base + e.u, layer * base + e.v});
    for (int layer = 0; layer < n_edges; ++layer)
        for (int v = 0; v < base; ++v)
            edges.push_back({layer * base + v, (layer + 1) * base + v});
    return Multigraph(base * (n_edges + 1), std::move(edges));
}

Multigraph hypercube(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("hypercube: need 1 <= n <= 10");
    std::vector<Edge> edges;
    int verts = 1;
    for (int dim = 0; dim < n; ++dim) {
        // double the current cube, then match the two copies
        size_t m = edges.size();
        for (size_t e = 0; e < m; ++e)
            edges.push_back({edges[e].u + verts, edges[e].v + verts});
        for (int v = 0; v < verts; ++v) edges.push_back({v, v + verts});
        verts *= 2;
    }
    return Multigraph(verts, std::move(edges));
}

Multigraph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument(
            "generalized_petersen: need n >= 3 and 1 <= k < n/2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
    for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + k) % n});
    return Multigraph(2 * n, std::move(edges));
}

namespace {

struct HalinTree {
    std::vector<std::vector<int>> adj;  // dense relabeled, no degree-2 vertex
};

// Random recursive tree, then degree-2 suppression. Retries (advancing the
// rng) until at least 4 vertices and a branching vertex remain.
HalinTree random_halin_tree(int tree_size, Rng& rng) {
    while (true) {
        std::vector<std::vector<int>> adj(tree_size);
        for (int v = 1; v < tree_size; ++v) {
            int parent = static_cast<int>(uniform_below(rng, v));
            adj[v].push_back(parent);
            adj[parent].push_back(v);
        }

        std::vector<char> alive(tree_size, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < tree_size; ++v) {
                if (!alive[v] || adj[v].size() != 2) continue;
                int a = adj[v][0], b = adj[v][1];
                alive[v] = 0;
                adj[v].clear();
                std::erase(adj[a], v);
                std::erase(adj[b], v);
                adj[a].push_back(b);
                adj[b].push_back(a);
                changed = true;
            }
        }

        int remaining = 0;
        bool branching = false;
        for (int v = 0; v < tree_size; ++v) {
            if (!alive[v]) continue;
            ++remaining;
            if (adj[v].size() >= 3) branching = true;
        }
        if (remaining < 4 || !branching) continue;

        std::vector<int> dense(tree_size, -1);
        int next = 0;
        for (int v = 0; v < tree_size; ++v)
            if (alive[v]) dense[v] = next++;
        HalinTree t;
        t.adj.resize(remaining);
        for (int v = 0; v < tree_size; ++v) {
            if (!alive[v]) continue;
            for (int w : adj[v]) t.adj[dense[v]].push_back(dense[w]);
            std::sort(t.adj[dense[v]].begin(), t.adj[dense[v]].end());
        }
        return t;
    }
}

}  // namespace

Multigraph halin_graph(int tree_size, uint64_t seed) {
    Rng rng(seed);
    if (tree_size < 4)
        throw std::invalid_argument("halin_graph: need tree_size >= 4");
    HalinTree t = random_halin_tree(tree_size, rng);
    int n = static_cast<int>(t.adj.size());

    int root = 0;
    while (t.adj[root].size() < 3) ++root;  // exists by construction

    // Plane embedding: fixed child order; DFS then lists leaves in planar
    // order around the tree.
    std::vector<Edge> edges;
    std::vector<int> leaves;
    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    visited[root] = 1;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx == 0 && t.adj[v].size() == 1) leaves.push_back(v);
        bool descended = false;
        while (idx < t.adj[v].size()) {
            int w = t.adj[v][idx++];
            if (visited[w]) continue;
            visited[w] = 1;
            edges.push_back({v, w});
            stack.push_back({w, 0});
            descended = true;
            break;
        }
        if (!descended) stack.pop_back();
    }

    for (size_t i = 0; i < leaves.size(); ++i)
        edges.push_back({leaves[i], leaves[(i + 1) % leaves.size()]});
    return Multigraph(n, std::move(edges));
}

Multigraph halin_composition(int tree_size1, int tree_size2, int k,
                             uint64_t seed) {
    if (k < 2) throw std::invalid_argument("halin_composition: need k >= 2");
    Rng rng(seed);
    uint64_t seed1 = rng();
    uint64_t seed2 = rng();
    Multigraph h1 = halin_graph(tree_size1, seed1);
    Multigraph h2 = halin_graph(tree_size2, seed2);

    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    if (static_cast<long long>(k) > static_cast<long long>(n1) * n2)
        throw std::invalid_argument("halin_composition: k exceeds vertex pairs");
    std::vector<Edge> edges = h1.edges();
    for (const Edge& e : h2.edges()) edges.push_back({e.u + n1, e.v + n1});

    std::set<std::pair<int, int>> used;
    while (static_cast<int>(used.size()) < k) {
        int a = static_cast<int>(uniform_below(rng, n1));
        int b = static_cast<int>(uniform_below(rng, n2));
        if (used.insert({a, b}).second) edges.push_back({a, n1 + b});
    }
    return Multigraph(n1 + n2, std::move(edges));
}

Multigraph random_connected(int n, int m, bool loops_allowed, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected: need n >= 1");
    if (m < n - 1)
        throw std::invalid_argument("random_connected: need m >= n-1");
    if (n == 1 && m > 0 && !loops_allowed)
        throw std::invalid_argument(
            "random_connected: single vertex extras must be loops");

    Rng rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(uniform_below(rng, v)), v});
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(uniform_below(rng, n));
        int v = static_cast<int>(uniform_below(rng, n));
        if (!loops_allowed && u == v) continue;
        edges.push_back({u, v});
    }
    return Multigraph(n, std::move(edges));
}

Multigraph random_simple_connected(int n, int m, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_simple_connected: need n >= 1");
    long long cap = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > cap)
        throw std::invalid_argument(
            "random_simple_connected: need n-1 <= m <= n(n-1)/2");

    Rng rng(seed);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(uniform_below(rng, v));
        edges.push_back({parent, v});
        used.insert(std::minmax(parent, v));
    }
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(uniform_below(rng, n));
        int v = static_cast<int>(uniform_below(rng, n));
        if (u == v) continue;
        if (!used.insert(std::minmax(u, v)).second) continue;
        edges.push_back({u, v});
    }
    return Multigraph(n, std::move(edges));
}

}  // namespace maxgenus
