#pragma once

#include <cstdint>
#include <vector>

#include "maxgenus/intersection_graph.hpp"
#include "maxgenus/multigraph.hpp"
#include "maxgenus/spanning_tree.hpp"

namespace maxgenus {

// One matched pair of fundamental cycles, with the vertex that witnesses
// their intersection (smallest common id).
struct CertificatePair {
    int cycle_a;
    int cycle_b;
    VertexId witness_vertex;
    EdgeId cotree_edge_a;
    EdgeId cotree_edge_b;
};

struct GenusReport {
    int beta = 0;
    int gamma_max = 0;
    int xi = 0;  // reported as beta - 2*gamma_max
    bool upper_embeddable = false;
    SpanningTree tree_used;
    int xi_of_tree_used = 0;  // the tree's own odd-component count; may exceed xi
    std::vector<CertificatePair> certificate;
};

// Full pipeline: spanning tree -> fundamental cycles -> cycle intersection
// graph -> maximum matching. gamma_max is the matching size. Throws
// DisconnectedGraph; throws InvariantViolation if the report's internal
// invariants fail to hold.
GenusReport maximum_genus(const Multigraph& g,
                          TreeStrategy strategy = TreeStrategy::DeterministicDfs,
                          uint64_t seed = 0);

// Same pipeline from a caller-chosen spanning tree.
GenusReport maximum_genus_with_tree(const Multigraph& g, const SpanningTree& t);

struct PairExtension {
    GenusReport before;  // for g
    GenusReport after;   // for g plus the two new edges
};

// Adds two new edges whose would-be fundamental cycles through t share a
// vertex. The genus rises by at least one; when g is upper-embeddable the
// rise is exactly one and upper-embeddability carries over (the parity of
// the Betti deficiency pins it). A deficient g can gain two; see the
// dumbbell test. Throws PreconditionFailed if the two cycles are
// vertex-disjoint.
PairExtension add_intersecting_pair(const Multigraph& g, const SpanningTree& t,
                                    Edge e1, Edge e2);

struct EdgeCutReport {
    bool blocks_upper_embeddable;  // premise, established by recursion
    bool bound_holds;              // gamma_max(g) >= floor(beta/2) - 1
    bool both_betas_even;          // betti even on both sides
    bool odd_cut_odd_beta_sum;     // |cut| odd and the betti sum odd
    bool upper_claim_applicable;   // either sufficient condition holds
    int beta_g1;
    int beta_g2;
    int cut_size;
};

// For a cut whose removal splits g into exactly two components: checks the
// genus lower bound and the two sufficient conditions for
// upper-embeddability. Throws NotATwoComponentCut if the cut does not
// split g into exactly two sides or contains an edge internal to one side.
EdgeCutReport analyze_edge_cut(const Multigraph& g, const EdgeSubset& cut);

// Returns whether all fundamental cycles of (g, t) pairwise intersect;
// when they do, verifies that the pipeline reports g upper-embeddable
// (InvariantViolation otherwise).
bool verify_pairwise_upper(const Multigraph& g, const SpanningTree& t);

}  // namespace maxgenus
