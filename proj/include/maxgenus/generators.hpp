#pragma once

#include <cstdint>

#include "maxgenus/multigraph.hpp"

namespace maxgenus {

// All generators are pure functions of their parameters (and seed, where
// one is taken): equal calls produce identical graphs, edge ids included.

Multigraph path_graph(int n_edges);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph bouquet(int loops);

// Two triangles joined by a bridge; the canonical non-upper-embeddable graph.
Multigraph dumbbell();

// Cartesian product of a simple connected graph with a path of n_edges
// edges: a copy of g per layer plus rungs between consecutive layers.
// Throws NotSimple / DisconnectedGraph on a bad factor.
Multigraph cartesian_path_product(const Multigraph& g, int n_edges);

// n-cube, built as two (n-1)-cubes joined by a perfect matching. 1 <= n <= 10.
Multigraph hypercube(int n);

// Outer n-cycle u_0..u_{n-1}, spokes (u_i, v_i), inner edges (v_i, v_{i+k}).
// Requires n >= 3 and 1 <= k < n/2.
Multigraph generalized_petersen(int n, int k);

// A random Halin graph: plane tree with no degree-2 vertices, leaves joined
// by a cycle in planar order. tree_size is the vertex count of the grown
// tree before degree-2 suppression (>= 4).
Multigraph halin_graph(int tree_size, uint64_t seed);

// Two seeded random Halin graphs plus k (>= 2) distinct random edges
// between them.
Multigraph halin_composition(int tree_size1, int tree_size2, int k,
                             uint64_t seed);

// Random spanning tree plus m-n+1 random endpoint pairs. Needs m >= n-1;
// a single vertex with m > 0 requires loops_allowed.
Multigraph random_connected(int n, int m, bool loops_allowed, uint64_t seed);

// As above but rejecting loops and parallel edges; needs m <= n(n-1)/2.
Multigraph random_simple_connected(int n, int m, uint64_t seed);

}  // namespace maxgenus
