// oracle.hpp — independent verification oracles: exhaustive subset and
// labeled-tree search, submodularity chain sampling, and Monte Carlo
// simulation of the noisy consensus dynamics. These paths never use the
// rank-one update machinery they are meant to check.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netcoh/graph.hpp"

namespace netcoh {

struct OracleResult {
    double best_value = 0.0;
    std::vector<Edge> best_witness;
    std::uint64_t instances_examined = 0;
};

/// Exact minimizer of trace(L^+) over all k-subsets of `candidates`, each
/// evaluated by a full pseudoinverse recomputation. Requires g connected,
/// 0 <= k <= |candidates|, and C(|candidates|, k) <= 1e6.
OracleResult best_subset_bruteforce(const Graph& g,
                                    const std::vector<CandidateEdge>& candidates,
                                    int k);

/// Exact minimizer of trace(L^+) over all n^(n-2) labeled trees, enumerated
/// via Prufer sequences. Requires 2 <= n <= 8. Pairs with nonpositive weight
/// are treated as absent (trees containing them are skipped).
OracleResult best_tree_bruteforce(int n, const WeightFn& weight);

/// Objective for submodularity sampling: maps a graph to the value whose
/// per-edge gains are checked for diminishing returns.
using GraphValueFn = std::function<double(const Graph&)>;

/// Draws `samples` random chains A subset-of B subset-of candidates and
/// e outside B, and counts violations of gain(e|A) >= gain(e|B) - 1e-9.
/// Gains default to trace decreases computed by full recomputation.
int submodularity_sample(const Graph& g,
                         const std::vector<CandidateEdge>& candidates,
                         int samples, std::uint64_t seed,
                         const GraphValueFn& value = {});

struct SimulationEstimate {
    double coherence_hat = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    double horizon = 0.0;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr double kDefaultSimDt = 0.005;
inline constexpr double kDefaultSimHorizon = 50.0;
inline constexpr std::int64_t kDefaultSimTrials = 400;

/// Euler-Maruyama integration of dx = -Lx dt + dW from x(0) = 0; estimates
/// the steady-state disagreement E[x^T P x] by time-averaging the second half
/// of each trajectory over independent trials. Requires g connected,
/// dt <= 0.1/lambda_max, horizon >= 10/lambda_2, trials >= 2.
SimulationEstimate simulate_coherence(const Graph& g, double dt, double horizon,
                                      std::int64_t trials, std::uint64_t seed);

}  // namespace netcoh
