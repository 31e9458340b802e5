#include "netcoh/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace netcoh {

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace

ErdosRenyiResult make_erdos_renyi(int n, double c, std::uint64_t seed,
                                  int max_attempts) {
    if (n < 2) throw std::invalid_argument("er generator requires n >= 2");
    if (!(c > 0.0)) throw std::invalid_argument("er scale c must be positive");
    const double p = std::min(c * std::log(static_cast<double>(n)) / n, 1.0);
    if (!(p > 0.0)) throw std::invalid_argument("er edge probability must be positive");

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform01(rng) < p) edges.push_back({u, v, 1.0});
        Graph g(n, std::move(edges));
        if (is_connected(g)) return ErdosRenyiResult{std::move(g), attempt};
    }
    throw std::runtime_error("er generator: no connected sample in " +
                             std::to_string(max_attempts) + " attempts");
}

Graph make_barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n)
        throw std::invalid_argument("ba generator requires 1 <= m < n");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // Degree-proportional sampling via the repeated-endpoints list.
    std::vector<int> repeated;
    std::vector<int> targets(m);
    for (int i = 0; i < m; ++i) targets[i] = i;

    for (int source = m; source < n; ++source) {
        for (int t : targets) {
            edges.push_back({std::min(source, t), std::max(source, t), 1.0});
            repeated.push_back(t);
            repeated.push_back(source);
        }
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            const int pick = repeated[rng() % repeated.size()];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end())
                targets.push_back(pick);
        }
    }
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    edges.push_back({0, n - 1, 1.0});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph requires n >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

}  // namespace netcoh
