#pragma once

#include <cstdint>
#include <vector>

#include "maxgenus/matching.hpp"
#include "maxgenus/multigraph.hpp"

// Test-only helpers. Everything here is independent of the library's
// pipeline path so it can serve as ground truth against it.
namespace maxgenus::testsupport {

// Spanning tree count via the matrix-tree theorem (integer Bareiss
// elimination, loops ignored). Independent of the enumeration oracle.
uint64_t kirchhoff_tree_count(const Multigraph& g);

// Brute-force multigraph isomorphism over vertex permutations; only for
// small graphs.
bool isomorphic(const Multigraph& a, const Multigraph& b);

bool is_valid_matching(const SimpleGraph& h, const Matching& m);

// Exhaustive search for an augmenting path w.r.t. the given matching
// (backtracking over simple alternating paths; small graphs only).
bool augmenting_path_exists(const SimpleGraph& h, const Matching& m);

// Possibly disconnected G(n, m)-style simple graph.
SimpleGraph random_simple_graph(int n, int m, uint64_t seed);

// All labeled connected simple graphs on exactly n vertices.
std::vector<Multigraph> all_connected_simple_graphs(int n);

// Hub vertex 0 plus a rim cycle of `rim` vertices, every rim vertex spoked
// to the hub.
Multigraph wheel(int rim);

// Two triangles sharing one vertex.
Multigraph bowtie();

// Deterministic mixed corpus (families plus seeded random multigraphs),
// all connected, suitable for property tests.
std::vector<Multigraph> corpus_graphs(int count);

}  // namespace maxgenus::testsupport
