// graph.hpp — weighted undirected graphs, incidence rows, Laplacian assembly,
// connectivity, and candidate-edge enumeration.

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace netcoh {

/// One undirected weighted edge, stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Orders by endpoint pair only; weights do not participate.
inline bool edge_key_less(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
}

/// Sparse form of an edge's incidence vector m_e: the dense expansion has
/// +scale at u, -scale at v, zeros elsewhere, with scale = sqrt(w) so that
/// m_e m_e^T is the single-edge Laplacian.
struct IncidenceRow {
    int u = 0;
    int v = 0;
    double scale = 0.0;
};

/// A potential edge outside the current graph, with lazy-greedy bookkeeping.
struct CandidateEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
    double cached_gain = 0.0;
    int stamp = -1;  // iteration at which cached_gain was computed
};

/// Partition of nodes into connected components. Labels are dense, 0-based,
/// ordered by each component's smallest node id.
struct ComponentSet {
    std::vector<int> label;  // component id per node
    std::vector<int> size;   // size per component id
    int count = 0;

    bool same(int u, int v) const { return label[u] == label[v]; }
    /// Merges the components containing u and v; keeps labels dense and
    /// ordered. No-op if already together.
    void merge(int u, int v);
};

/// Immutable weighted undirected graph on nodes 0..n-1. Edges are stored
/// canonically (u < v, sorted lexicographically, no duplicates, w >= 0).
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);
    explicit Graph(int n) : Graph(n, {}) {}

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

using WeightFn = std::function<double(int, int)>;

/// Returns g plus one edge; throws if (u,v) is already present.
Graph add_edge(const Graph& g, Edge e);

/// Incidence vector of one edge, scale = sqrt(w). Throws on self-loops.
IncidenceRow incidence_row(const Edge& e);

/// Dense expansion of an incidence row on n nodes.
Eigen::VectorXd dense_incidence(const IncidenceRow& row, int n);

/// Weighted Laplacian L = sum_e m_e m_e^T: diagonal = weighted degrees,
/// off-diagonal = -w per edge.
Eigen::MatrixXd laplacian(const Graph& g);

/// Connected components over edges with w > 0 (zero weight is absent).
ComponentSet connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// All node pairs (u < v) not in g, weighted by `weight` (default 1), sorted
/// lexicographically.
std::vector<CandidateEdge> candidate_edges(const Graph& g,
                                           const WeightFn& weight = {});

}  // namespace netcoh
