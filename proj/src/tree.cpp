#include "netcoh/tree.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcoh/oracle.hpp"
#include "netcoh/pinv.hpp"

namespace netcoh {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double checked_weight(const WeightFn& weight, int u, int v) {
    const double w = weight(u, v);
    if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument("weight(" + std::to_string(u) + "," +
                                    std::to_string(v) + ") must be finite and >= 0");
    return w;
}

struct Builder {
    PinvState state;
    std::vector<bool> covered;
    SelectionReport report;

    explicit Builder(PinvState initial, std::string algorithm)
        : state(std::move(initial)), covered(state.node_count(), false) {
        report.algorithm = std::move(algorithm);
        report.trace_before = state.trace;
    }

    // argmin of the attach gain over feasible edges (exactly one endpoint
    // covered, positive weight); ties go to the smallest (u,v).
    void attach_best(const WeightFn& weight) {
        const auto start = Clock::now();
        const int n = state.node_count();
        bool found = false;
        Edge best{};
        double best_gain = 0.0;
        std::int64_t evals = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (covered[u] == covered[v]) continue;
                const double w = checked_weight(weight, u, v);
                if (w == 0.0) continue;
                const double gain = attach_gain(state, incidence_row({u, v, w}));
                ++evals;
                if (!found || gain < best_gain) {
                    found = true;
                    best = Edge{u, v, w};
                    best_gain = gain;
                }
            }
        }
        if (!found)
            throw std::runtime_error(
                "tree construction stuck: no feasible positive-weight edge");
        apply(best, evals, start);
    }

    void apply(const Edge& e, std::int64_t evals, Clock::time_point start) {
        PinvState next = attach_update(state, incidence_row(e));
        report.selected.push_back(e);
        report.gains.push_back(next.trace - state.trace);
        report.eval_counts.push_back(evals);
        report.wall_times_s.push_back(seconds_since(start));
        covered[e.u] = true;
        covered[e.v] = true;
        state = std::move(next);
    }

    TreeBuildResult finish(int n) {
        report.trace_after = state.trace;
        return TreeBuildResult{Graph(n, report.selected), std::move(report)};
    }
};

}  // namespace

TreeBuildResult build_tree(int n, const WeightFn& weight) {
    if (n < 2) throw std::invalid_argument("build_tree requires n >= 2");

    // Line 1: seed with the maximum-weight edge (lexicographic tie-break).
    bool found = false;
    Edge seed_edge{};
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double w = checked_weight(weight, u, v);
            if (w == 0.0) continue;
            if (!found || w > seed_edge.w) {
                found = true;
                seed_edge = Edge{u, v, w};
            }
        }
    }
    if (!found)
        throw std::runtime_error("build_tree: no positive-weight edge to start from");

    Builder builder(pinv_of_graph(Graph(n)), "tree");
    builder.apply(seed_edge, 0, Clock::now());
    while (static_cast<int>(builder.report.selected.size()) < n - 1)
        builder.attach_best(weight);
    return builder.finish(n);
}

TreeBuildResult attach_nodes(const Graph& g, int new_nodes, const WeightFn& weight) {
    if (new_nodes < 0) throw std::invalid_argument("new_nodes must be nonnegative");
    if (!is_connected(g))
        throw std::invalid_argument("attach_nodes requires a connected graph");

    const int n = g.node_count();
    const Graph extended(n + new_nodes, g.edges());
    Builder builder(pinv_of_graph(extended), "attach");
    for (int i = 0; i < n; ++i) builder.covered[i] = true;
    for (int step = 0; step < new_nodes; ++step) builder.attach_best(weight);
    return builder.finish(n + new_nodes);
}

double star_trace(int n) {
    return static_cast<double>(n - 1) * (n - 1) / n;
}

StarCertificate star_certificate(int n) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("star_certificate supports 3 <= n <= 8");
    const WeightFn unit = [](int, int) { return 1.0; };

    StarCertificate cert;
    cert.n = n;
    cert.built_trace = build_tree(n, unit).report.trace_after;
    cert.star_trace = star_trace(n);
    cert.brute_trace = best_tree_bruteforce(n, unit).best_value;
    if (std::abs(cert.built_trace - cert.star_trace) > 1e-9 ||
        std::abs(cert.brute_trace - cert.star_trace) > 1e-9)
        throw std::runtime_error("star certificate mismatch at n=" + std::to_string(n));
    return cert;
}

}  // namespace netcoh
