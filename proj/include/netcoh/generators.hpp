// generators.hpp — seeded graph generators for experiments.

#pragma once

#include <cstdint>

#include "netcoh/graph.hpp"

namespace netcoh {

struct ErdosRenyiResult {
    Graph graph;
    int attempts = 1;  // resamples needed until connected
};

/// G(n, p) with p = c * ln(n) / n clamped to (0, 1]; resamples until the
/// graph is connected. Throws once max_attempts samples all come out
/// disconnected.
ErdosRenyiResult make_erdos_renyi(int n, double c, std::uint64_t seed,
                                  int max_attempts = 200);

/// Preferential attachment with m edges per arriving node; m = 1 yields a
/// scale-free tree. Requires 1 <= m < n.
Graph make_barabasi_albert(int n, int m, std::uint64_t seed);

/// The n-cycle, unit weights. Requires n >= 3.
Graph make_cycle(int n);

/// The complete graph K_n, unit weights. Requires n >= 2.
Graph make_complete(int n);

}  // namespace netcoh
