// cli.hpp — command-line driver, callable in-process for tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcoh/io.hpp"

namespace netcoh {

/// Parsed experiment configuration shared by the subcommands.
struct ExperimentConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string out_graph;
    int n = 0;
    int k = 0;
    std::string kind;       // er | cycle | ba | complete
    double er_c = 1.1;      // edge probability scale: p = c ln(n) / n
    int ba_m = 1;
    std::string algorithm = "lazy";  // naive | lazy | both
    std::uint64_t seed = 0;
    double weight = 1.0;    // default candidate-edge weight
    bool stable_output = false;
};

/// Runs one subcommand. Returns 0 on success, 1 on usage errors, 2 on
/// runtime errors (I/O, parse, disconnected input, budget exhaustion).
int run_cli(const std::vector<std::string>& args);

/// Library form of the benchmark subcommand: for each n, generates a seeded
/// Erdos-Renyi graph (p = 1.1 ln(n)/n) and runs both greedy algorithms with
/// k = k_fn(n), recording evaluation counts and wall times.
std::vector<BenchmarkRecord> run_benchmark(const std::vector<int>& sizes,
                                           const std::function<int(int)>& k_fn,
                                           std::uint64_t seed);

}  // namespace netcoh
