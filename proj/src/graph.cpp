#include "netcoh/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace netcoh {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

void ComponentSet::merge(int u, int v) {
    int a = label[u];
    int b = label[v];
    if (a == b) return;
    if (a > b) std::swap(a, b);
    size[a] += size[b];
    size.erase(size.begin() + b);
    for (int& l : label) {
        if (l == b)
            l = a;
        else if (l > b)
            --l;
    }
    --count;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("node count must be nonnegative");
    for (Edge& e : edges_) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop " + edge_str(e.u, e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge " + edge_str(e.u, e.v) +
                                        " out of range for n=" + std::to_string(n_));
        if (!(e.w >= 0.0))
            throw std::invalid_argument("negative weight on edge " + edge_str(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end(), edge_key_less);
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge " +
                                        edge_str(edges_[i].u, edges_[i].v));
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, 0.0};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_key_less);
    return it != edges_.end() && it->u == u && it->v == v;
}

Graph add_edge(const Graph& g, Edge e) {
    std::vector<Edge> edges = g.edges();
    edges.push_back(e);
    return Graph(g.node_count(), std::move(edges));  // validates duplicates etc.
}

IncidenceRow incidence_row(const Edge& e) {
    if (e.u == e.v) throw std::invalid_argument("self-loop has no incidence row");
    if (!(e.w >= 0.0)) throw std::invalid_argument("negative edge weight");
    IncidenceRow row;
    row.u = std::min(e.u, e.v);
    row.v = std::max(e.u, e.v);
    row.scale = std::sqrt(e.w);
    return row;
}

Eigen::VectorXd dense_incidence(const IncidenceRow& row, int n) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
    m[row.u] = row.scale;
    m[row.v] = -row.scale;
    return m;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        L(e.u, e.u) += e.w;
        L(e.v, e.v) += e.w;
        L(e.u, e.v) -= e.w;
        L(e.v, e.u) -= e.w;
    }
    return L;
}

ComponentSet connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.w > 0.0) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }
    ComponentSet comps;
    comps.label.assign(n, -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comps.label[start] != -1) continue;
        int id = comps.count++;
        comps.size.push_back(0);
        stack.push_back(start);
        comps.label[start] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++comps.size[id];
            for (int v : adj[u]) {
                if (comps.label[v] == -1) {
                    comps.label[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return connected_components(g).count == 1;
}

std::vector<CandidateEdge> candidate_edges(const Graph& g, const WeightFn& weight) {
    std::vector<CandidateEdge> out;
    const int n = g.node_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            CandidateEdge c;
            c.u = u;
            c.v = v;
            c.w = weight ? weight(u, v) : 1.0;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace netcoh
