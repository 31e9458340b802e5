// tree.hpp — growing spanning trees with small trace(L^+) by repeatedly
// attaching the node whose connecting edge minimizes the trace increase.

#pragma once

#include "netcoh/graph.hpp"
#include "netcoh/greedy.hpp"

namespace netcoh {

struct TreeBuildResult {
    Graph tree;
    SelectionReport report;
};

/// Grows a spanning tree on nodes 0..n-1 with pairwise weights from `weight`:
/// starts from the maximum-weight edge, then repeatedly adds the feasible
/// edge (exactly one endpoint covered) with minimal attach gain. Ties break
/// lexicographically. Zero-weight pairs are treated as absent; negative or
/// non-finite weights throw. Requires n >= 2.
TreeBuildResult build_tree(int n, const WeightFn& weight);

/// Attaches `new_nodes` nodes (ids n..n+new_nodes-1) to connected g, one at a
/// time, by the same minimal-attach-gain rule over covered-to-uncovered edges.
TreeBuildResult attach_nodes(const Graph& g, int new_nodes, const WeightFn& weight);

/// Closed-form trace(L^+) of the unit-weight star on n nodes: (n-1)^2 / n.
double star_trace(int n);

/// Cross-check record for unit weights, 3 <= n <= 8: the built tree's trace,
/// the star closed form, and the brute-force minimum over all labeled trees.
/// Throws if the three disagree beyond 1e-9.
struct StarCertificate {
    int n = 0;
    double built_trace = 0.0;
    double star_trace = 0.0;
    double brute_trace = 0.0;
};

StarCertificate star_certificate(int n);

}  // namespace netcoh
