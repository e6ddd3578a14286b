#pragma once

#include <utility>
#include <vector>

#include "maxgenus/bitset.hpp"

namespace maxgenus {

using VertexId = int;
using EdgeId = int;

// Subset of a graph's edge ids.
using EdgeSubset = Bitset;

struct Edge {
    VertexId u;
    VertexId v;
    bool is_loop() const { return u == v; }
};

// Undirected multigraph. Loops and parallel edges are allowed; edge ids are
// dense 0..m-1 in construction order. Immutable after construction, so any
// number of threads may query a shared instance.
class Multigraph {
public:
    struct Incidence {
        EdgeId edge;
        VertexId other;  // equals the vertex itself for a loop
    };

    Multigraph(int n_vertices, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edges in ascending edge-id order; a loop appears once.
    const std::vector<Incidence>& incident(VertexId v) const {
        return incidence_[v];
    }

    // Loops contribute 2.
    int degree(VertexId v) const;

    EdgeSubset all_edges() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> incidence_;
};

bool is_connected(const Multigraph& g);

// Betti number |E| - |V| + 1. Throws DisconnectedGraph.
int betti(const Multigraph& g);

// Connected components of the subgraph induced by the edges in `s`,
// as edge sets ordered by smallest member edge id. Isolated vertices
// produce no component; a component's size is its edge count.
std::vector<EdgeSubset> components_of_subset(const Multigraph& g,
                                             const EdgeSubset& s);

// Copy of g with the given endpoint pairs appended as new edges.
Multigraph add_edges(const Multigraph& g, const std::vector<Edge>& extra);

}  // namespace maxgenus
