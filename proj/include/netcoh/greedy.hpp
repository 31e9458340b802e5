// greedy.hpp — k-edge selection minimizing trace(L^+): the naive full-sweep
// greedy and the accelerated lazy variant with stale-gain re-evaluation.

#pragma once

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "netcoh/graph.hpp"

namespace netcoh {

/// Audit trail of one selection run. `gains` holds per-iteration trace
/// changes as nonnegative magnitudes: decreases for the greedy algorithms,
/// increases for the tree/attach builders (see `algorithm`).
struct SelectionReport {
    std::string algorithm;  // "naive" | "lazy" | "tree" | "attach"
    std::uint64_t seed = 0;
    std::vector<Edge> selected;
    std::vector<double> gains;
    double trace_before = 0.0;
    double trace_after = 0.0;
    std::vector<std::int64_t> eval_counts;
    std::vector<double> wall_times_s;

    std::int64_t total_evals() const;
};

/// Max-priority queue over candidates keyed by (cached_gain desc, then (u,v)
/// lexicographic asc). After a pop/re-evaluate/reinsert cycle settles, the
/// accepted element's fresh gain is >= every cached gain left in the queue.
class LazyQueue {
public:
    void push(const CandidateEdge& e) { heap_.push(e); }
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    CandidateEdge pop() {
        CandidateEdge top = heap_.top();
        heap_.pop();
        return top;
    }

private:
    struct Order {
        bool operator()(const CandidateEdge& a, const CandidateEdge& b) const {
            if (a.cached_gain != b.cached_gain)
                return a.cached_gain < b.cached_gain;
            // equal gains: smaller (u,v) wins, so it must compare "greater"
            return a.u != b.u ? a.u > b.u : a.v > b.v;
        }
    };
    std::priority_queue<CandidateEdge, std::vector<CandidateEdge>, Order> heap_;
};

/// Each iteration evaluates the marginal trace decrease of every remaining
/// candidate and applies the best (ties: lexicographically smallest pair).
/// Requires g connected and k >= 0; selects min(k, |candidates|) edges.
SelectionReport naive_greedy(const Graph& g, std::vector<CandidateEdge> candidates,
                             int k, std::uint64_t seed = 0);

/// Accelerated greedy: cached gains are upper bounds (submodularity), so only
/// the queue top needs re-evaluation. Selects the same sequence as
/// naive_greedy under the shared tie-break rule.
SelectionReport lazy_greedy(const Graph& g, std::vector<CandidateEdge> candidates,
                            int k, std::uint64_t seed = 0);

/// Suboptimality certificate (f* - f(S_greedy)) / (f* - f(empty)) where f is
/// the total trace decrease and optimal_decrease = f* comes from the
/// brute-force oracle. 0 when f* = 0. Throws if the oracle value is smaller
/// than the realized decrease beyond 1e-9 (oracle inconsistency).
double greedy_bound_certificate(const SelectionReport& report,
                                double optimal_decrease);

}  // namespace netcoh
