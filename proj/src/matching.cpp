#include "maxgenus/matching.hpp"

#include <algorithm>
#include <numeric>

namespace maxgenus {

namespace {

// Edmonds' algorithm, BFS formulation: grow an alternating forest from a
// free root; on an even-even edge, contract the odd cycle by redirecting
// every member's base to the cycle's lowest common ancestor. base[] gives
// the contraction representative, p[] the alternating-forest parent.
struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, p, base, queue;
    std::vector<char> used, in_blossom, on_path;

    explicit BlossomSolver(const SimpleGraph& h)
        : n(h.n), adj(h.adj), match(n, -1), p(n, -1), base(n),
          used(n, 0), in_blossom(n, 0), on_path(n, 0) {
        // scan order is a function of the graph value, not insertion order
        for (auto& lst : adj) std::sort(lst.begin(), lst.end());
    }

    int lca(int a, int b) {
        std::fill(on_path.begin(), on_path.end(), 0);
        int x = a;
        while (true) {
            x = base[x];
            on_path[x] = 1;
            if (match[x] == -1) break;  // reached the root
            x = p[match[x]];
        }
        int y = b;
        while (true) {
            y = base[y];
            if (on_path[y]) return y;
            y = p[match[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    // Grows the forest from `root`; returns the free vertex ending an
    // augmenting path, or -1 if none exists.
    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        queue.clear();
        queue.push_back(root);

        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // both endpoints even: odd cycle, contract it
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = cur;
                        if (!used[i]) {
                            used[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p[v], next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void solve() {
        // greedy seed: each free vertex grabs its lowest free neighbor
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to : adj[v]) {
                if (match[to] == -1) {
                    match[v] = to;
                    match[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int end = find_path(v);
            if (end != -1) augment(end);
        }
    }
};

}  // namespace

Matching max_matching(const SimpleGraph& h) {
    BlossomSolver solver(h);
    solver.solve();
    Matching m;
    for (int v = 0; v < h.n; ++v)
        if (solver.match[v] > v) m.pairs.push_back({v, solver.match[v]});
    return m;
}

}  // namespace maxgenus
