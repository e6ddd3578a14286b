#include "maxgenus/multigraph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "maxgenus/errors.hpp"

namespace maxgenus {

Multigraph::Multigraph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)), incidence_(n_vertices) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        " references vertex outside 0.." +
                                        std::to_string(n_ - 1));
        EdgeId id = static_cast<EdgeId>(i);
        incidence_[e.u].push_back({id, e.v});
        if (!e.is_loop()) incidence_[e.v].push_back({id, e.u});
    }
}

int Multigraph::degree(VertexId v) const {
    int d = 0;
    for (const Incidence& inc : incidence_[v]) d += inc.other == v ? 2 : 1;
    return d;
}

EdgeSubset Multigraph::all_edges() const {
    EdgeSubset s(edge_count());
    for (int e = 0; e < edge_count(); ++e) s.set(e);
    return s;
}

bool is_connected(const Multigraph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v)) {
            if (!seen[inc.other]) {
                seen[inc.other] = 1;
                ++reached;
                stack.push_back(inc.other);
            }
        }
    }
    return reached == n;
}

int betti(const Multigraph& g) {
    if (!is_connected(g)) throw DisconnectedGraph("betti: graph is disconnected");
    return g.edge_count() - g.vertex_count() + 1;
}

namespace {

// Union-find over vertex ids, used to group the edges of a subset.
struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

std::vector<EdgeSubset> components_of_subset(const Multigraph& g,
                                             const EdgeSubset& s) {
    if (s.capacity() != g.edge_count())
        throw std::invalid_argument(
            "components_of_subset: subset sized for a different graph");
    Dsu dsu(g.vertex_count());
    s.for_each([&](int e) { dsu.unite(g.edge(e).u, g.edge(e).v); });

    // Group edges by the root of either endpoint; a loop belongs to the
    // component of its vertex.
    std::vector<int> root_to_slot(g.vertex_count(), -1);
    std::vector<EdgeSubset> out;
    s.for_each([&](int e) {
        int r = dsu.find(g.edge(e).u);
        if (root_to_slot[r] < 0) {
            root_to_slot[r] = static_cast<int>(out.size());
            out.emplace_back(g.edge_count());
        }
        out[root_to_slot[r]].set(e);
    });
    return out;
}

Multigraph add_edges(const Multigraph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : extra) {
        if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 ||
            e.v >= g.vertex_count())
            throw std::invalid_argument("add_edges: endpoint outside graph");
        edges.push_back(e);
    }
    return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace maxgenus
