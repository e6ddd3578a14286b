#include "maxgenus/genus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "maxgenus/errors.hpp"
#include "maxgenus/matching.hpp"

namespace maxgenus {

namespace {

void validate_report(const GenusReport& r) {
    auto fail = [](const std::string& what) {
        throw InvariantViolation("genus report: " + what);
    };
    if (r.gamma_max != static_cast<int>(r.certificate.size()))
        fail("gamma_max does not equal certificate size");
    if (r.xi != r.beta - 2 * r.gamma_max) fail("xi != beta - 2*gamma_max");
    if (r.xi < 0) fail("negative xi");
    if (r.upper_embeddable != (r.xi <= 1)) fail("upper-embeddable flag wrong");
    for (const CertificatePair& pr : r.certificate)
        if (pr.witness_vertex < 0) fail("matched cycles share no vertex");
}

GenusReport report_from_cycles(const Multigraph& g, const SpanningTree& t,
                               std::vector<FundamentalCycle> cycles) {
    IntersectionGraph ig = build_intersection_graph(std::move(cycles));
    Matching m = max_matching(ig.as_simple_graph());

    GenusReport r;
    r.beta = ig.n_cycles;
    r.gamma_max = m.size();
    r.xi = r.beta - 2 * r.gamma_max;
    r.upper_embeddable = r.xi <= 1;
    r.tree_used = t;
    r.xi_of_tree_used = xi_of_tree(g, t);
    for (auto [i, j] : m.pairs) {
        const FundamentalCycle& a = ig.source_cycles[i];
        const FundamentalCycle& b = ig.source_cycles[j];
        r.certificate.push_back(
            {i, j, common_vertex(a, b), a.cotree_edge, b.cotree_edge});
    }
    validate_report(r);
    return r;
}

}  // namespace

GenusReport maximum_genus_with_tree(const Multigraph& g, const SpanningTree& t) {
    return report_from_cycles(g, t, fundamental_cycles(g, t));
}

GenusReport maximum_genus(const Multigraph& g, TreeStrategy strategy,
                          uint64_t seed) {
    SpanningTree t = spanning_tree(g, strategy, seed);
    return maximum_genus_with_tree(g, t);
}

PairExtension add_intersecting_pair(const Multigraph& g, const SpanningTree& t,
                                    Edge e1, Edge e2) {
    FundamentalCycle c1 = cycle_through_tree(g, t, e1.u, e1.v);
    FundamentalCycle c2 = cycle_through_tree(g, t, e2.u, e2.v);
    if (!c1.vertex_set.intersects(c2.vertex_set))
        throw PreconditionFailed(
            "add_intersecting_pair: the two cycles are vertex-disjoint");

    PairExtension ext;
    ext.before = maximum_genus_with_tree(g, t);

    Multigraph extended = add_edges(g, {e1, e2});
    EdgeSubset tree_edges(extended.edge_count());
    t.tree_edges.for_each([&](int e) { tree_edges.set(e); });
    ext.after =
        maximum_genus_with_tree(extended, tree_from_edges(extended, tree_edges));

    // The rise is at least one; it is exactly one whenever the host is
    // upper-embeddable. A deficient host can absorb the pair into an even
    // co-tree component and gain two (e.g. the dumbbell plus two edges
    // bridging its triangles), so a bigger rise is reported, not rejected.
    if (ext.after.gamma_max < ext.before.gamma_max + 1)
        throw InvariantViolation(
            "add_intersecting_pair: genus failed to rise");
    if (ext.before.upper_embeddable &&
        ext.after.gamma_max != ext.before.gamma_max + 1)
        throw InvariantViolation(
            "add_intersecting_pair: rise on an upper-embeddable host "
            "was not exactly one");
    return ext;
}

namespace {

struct CutSplit {
    Multigraph g1;
    Multigraph g2;
};

// Splits g at the cut; throws unless exactly two components remain and
// every cut edge runs between them.
CutSplit split_at_cut(const Multigraph& g, const EdgeSubset& cut) {
    if (cut.capacity() != g.edge_count())
        throw std::invalid_argument(
            "analyze_edge_cut: cut sized for a different graph");
    int n = g.vertex_count();
    std::vector<int> comp_parent(n);
    std::iota(comp_parent.begin(), comp_parent.end(), 0);
    auto find = [&](int x) {
        while (comp_parent[x] != x) x = comp_parent[x] = comp_parent[comp_parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        if (!cut.test(e)) comp_parent[find(g.edge(e).u)] = find(g.edge(e).v);

    std::vector<int> side(n, -1);
    int sides = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (side[r] < 0) side[r] = sides++;
        side[v] = side[r];
    }
    if (sides != 2)
        throw NotATwoComponentCut("cut removal leaves " +
                                  std::to_string(sides) + " components");
    cut.for_each([&](int e) {
        if (side[g.edge(e).u] == side[g.edge(e).v])
            throw NotATwoComponentCut("cut edge " + std::to_string(e) +
                                      " is internal to one side");
    });

    std::vector<int> local(n, -1);
    int counts[2] = {0, 0};
    for (int v = 0; v < n; ++v) local[v] = counts[side[v]]++;
    std::vector<Edge> side_edges[2];
    for (int e = 0; e < g.edge_count(); ++e) {
        if (cut.test(e)) continue;
        int s = side[g.edge(e).u];
        side_edges[s].push_back({local[g.edge(e).u], local[g.edge(e).v]});
    }
    return {Multigraph(counts[0], std::move(side_edges[0])),
            Multigraph(counts[1], std::move(side_edges[1]))};
}

}  // namespace

EdgeCutReport analyze_edge_cut(const Multigraph& g, const EdgeSubset& cut) {
    CutSplit split = split_at_cut(g, cut);

    EdgeCutReport r;
    r.cut_size = cut.count();
    r.beta_g1 = betti(split.g1);
    r.beta_g2 = betti(split.g2);
    r.blocks_upper_embeddable = maximum_genus(split.g1).upper_embeddable &&
                                maximum_genus(split.g2).upper_embeddable;

    GenusReport whole = maximum_genus(g);
    r.bound_holds = whole.gamma_max >= whole.beta / 2 - 1;
    r.both_betas_even = r.beta_g1 % 2 == 0 && r.beta_g2 % 2 == 0;
    r.odd_cut_odd_beta_sum =
        r.cut_size % 2 == 1 && (r.beta_g1 + r.beta_g2) % 2 == 1;
    r.upper_claim_applicable = r.both_betas_even || r.odd_cut_odd_beta_sum;
    return r;
}

bool verify_pairwise_upper(const Multigraph& g, const SpanningTree& t) {
    IntersectionGraph ig = build_intersection_graph(fundamental_cycles(g, t));
    if (!pairwise_intersecting(ig)) return false;
    GenusReport r = maximum_genus_with_tree(g, t);
    if (!r.upper_embeddable)
        throw InvariantViolation(
            "pairwise intersecting cycles but not upper-embeddable");
    return true;
}

}  // namespace maxgenus
