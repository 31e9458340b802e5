#include "netcoh/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "netcoh/pinv.hpp"

namespace netcoh {

namespace {

constexpr std::uint64_t kSubsetBudget = 1'000'000;

// C(m, k), saturating at cap+1 so callers can test the budget without overflow.
std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    long double value = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * static_cast<long double>(m - k + i) / i;
        if (value > static_cast<long double>(cap) + 1.0L)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(value + 0.5L);
}

ComponentSet single_component(int n) {
    ComponentSet comps;
    comps.label.assign(n, 0);
    comps.size.assign(1, n);
    comps.count = 1;
    return comps;
}

void add_edge_laplacian(Eigen::MatrixXd& L, int u, int v, double w) {
    L(u, u) += w;
    L(v, v) += w;
    L(u, v) -= w;
    L(v, u) -= w;
}

// Independent trace evaluation: assemble and eigendecompose, no updates.
double trace_of(const Eigen::MatrixXd& L, const ComponentSet& comps) {
    return pinv_symmetric(L, comps).trace;
}

// Decodes a Prufer sequence over {0..n-1} into the edges of a labeled tree.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, s);
                degree[leaf] = 0;
                --degree[s];
                break;
            }
        }
    }
    int first = -1;
    for (int i = 0; i < n; ++i) {
        if (degree[i] == 1) {
            if (first == -1)
                first = i;
            else
                edges.emplace_back(first, i);
        }
    }
    return edges;
}

class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    double uniform() { return (rng_() >> 11) * 0x1.0p-53; }  // [0, 1)

    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

OracleResult best_subset_bruteforce(const Graph& g,
                                    const std::vector<CandidateEdge>& candidates,
                                    int k) {
    if (!is_connected(g))
        throw std::invalid_argument("subset oracle requires a connected graph");
    const int m = static_cast<int>(candidates.size());
    if (k < 0 || k > m)
        throw std::invalid_argument("k must lie in [0, |candidates|]");
    const std::uint64_t total = binomial_capped(m, k, kSubsetBudget);
    if (total > kSubsetBudget)
        throw std::runtime_error("subset oracle budget exceeded: C(" +
                                 std::to_string(m) + "," + std::to_string(k) +
                                 ") > 1e6");

    const Eigen::MatrixXd base = laplacian(g);
    const ComponentSet comps = connected_components(g);

    OracleResult result;
    result.best_value = std::numeric_limits<double>::infinity();

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Eigen::MatrixXd L = base;
        for (int i : idx)
            add_edge_laplacian(L, candidates[i].u, candidates[i].v, candidates[i].w);
        const double value = trace_of(L, comps);
        ++result.instances_examined;
        if (value < result.best_value) {
            result.best_value = value;
            result.best_witness.clear();
            for (int i : idx)
                result.best_witness.push_back(
                    {candidates[i].u, candidates[i].v, candidates[i].w});
        }
        // next combination in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return result;
}

OracleResult best_tree_bruteforce(int n, const WeightFn& weight) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("tree oracle supports 2 <= n <= 8");

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double w = weight(u, v);
            if (!std::isfinite(w) || w < 0.0)
                throw std::invalid_argument("tree oracle weights must be finite and >= 0");
            W(u, v) = w;
        }
    }
    const ComponentSet comps = single_component(n);

    OracleResult result;
    result.best_value = std::numeric_limits<double>::infinity();

    std::vector<int> seq(std::max(n - 2, 0), 0);
    while (true) {
        ++result.instances_examined;
        const auto pairs = prufer_decode(seq, n);
        bool feasible = true;
        Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
        for (auto [a, b] : pairs) {
            const double w = W(std::min(a, b), std::max(a, b));
            if (w == 0.0) {
                feasible = false;
                break;
            }
            add_edge_laplacian(L, a, b, w);
        }
        if (feasible) {
            const double value = trace_of(L, comps);
            if (value < result.best_value) {
                result.best_value = value;
                result.best_witness.clear();
                for (auto [a, b] : pairs) {
                    const int u = std::min(a, b);
                    const int v = std::max(a, b);
                    result.best_witness.push_back({u, v, W(u, v)});
                }
            }
        }
        // next Prufer sequence (odometer)
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    if (!std::isfinite(result.best_value))
        throw std::runtime_error("tree oracle: weight support admits no spanning tree");
    return result;
}

int submodularity_sample(const Graph& g,
                         const std::vector<CandidateEdge>& candidates,
                         int samples, std::uint64_t seed,
                         const GraphValueFn& value) {
    if (!is_connected(g))
        throw std::invalid_argument("submodularity sampling requires a connected graph");
    if (candidates.empty() || samples <= 0) return 0;

    const GraphValueFn value_fn =
        value ? value : GraphValueFn([](const Graph& h) { return pinv_of_graph(h).trace; });

    std::mt19937_64 rng(seed);
    const int m = static_cast<int>(candidates.size());
    int violations = 0;

    for (int s = 0; s < samples; ++s) {
        const int e_idx = static_cast<int>(rng() % m);
        std::vector<Edge> chain_a, chain_b;
        for (int i = 0; i < m; ++i) {
            if (i == e_idx) continue;
            const bool in_b = (rng() & 1) != 0;
            const bool in_a = in_b && (rng() & 1) != 0;
            const Edge e{candidates[i].u, candidates[i].v, candidates[i].w};
            if (in_b) chain_b.push_back(e);
            if (in_a) chain_a.push_back(e);
        }
        const Edge extra{candidates[e_idx].u, candidates[e_idx].v, candidates[e_idx].w};

        auto with = [&](const std::vector<Edge>& add, bool plus_extra) {
            std::vector<Edge> edges = g.edges();
            edges.insert(edges.end(), add.begin(), add.end());
            if (plus_extra) edges.push_back(extra);
            return value_fn(Graph(g.node_count(), std::move(edges)));
        };
        const double gain_a = with(chain_a, false) - with(chain_a, true);
        const double gain_b = with(chain_b, false) - with(chain_b, true);
        if (gain_a < gain_b - 1e-9) ++violations;
    }
    return violations;
}

SimulationEstimate simulate_coherence(const Graph& g, double dt, double horizon,
                                      std::int64_t trials, std::uint64_t seed) {
    if (!is_connected(g) || g.node_count() < 2)
        throw std::invalid_argument("simulation requires a connected graph on >= 2 nodes");
    if (trials < 2) throw std::invalid_argument("need at least 2 trials");
    if (!(dt > 0.0) || !(horizon > 0.0))
        throw std::invalid_argument("dt and horizon must be positive");

    const int n = g.node_count();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g));
    const double lam_max = solver.eigenvalues()[n - 1];
    const double lam_2 = solver.eigenvalues()[1];
    if (dt > 0.1 / lam_max * (1.0 + 1e-12))
        throw std::invalid_argument("unstable dt: require dt <= 0.1 / lambda_max");
    if (horizon < 10.0 / lam_2 * (1.0 - 1e-12))
        throw std::invalid_argument("horizon below mixing time 10 / lambda_2");

    const auto steps = static_cast<std::int64_t>(std::llround(horizon / dt));
    const std::int64_t burn_in = steps / 2;
    const double noise_scale = std::sqrt(dt);

    NormalSampler normal(seed);
    const auto& edges = g.edges();

    std::vector<double> estimates;
    estimates.reserve(trials);
    Eigen::VectorXd x(n), lap_x(n);
    for (std::int64_t t = 0; t < trials; ++t) {
        x.setZero();
        double accum = 0.0;
        for (std::int64_t step = 0; step < steps; ++step) {
            lap_x.setZero();
            for (const Edge& e : edges) {
                const double flow = e.w * (x[e.u] - x[e.v]);
                lap_x[e.u] += flow;
                lap_x[e.v] -= flow;
            }
            for (int i = 0; i < n; ++i)
                x[i] += -dt * lap_x[i] + noise_scale * normal();
            if (step >= burn_in) {
                const double mean = x.mean();
                accum += (x.array() - mean).square().sum();
            }
        }
        estimates.push_back(accum / static_cast<double>(steps - burn_in));
    }

    double mean = 0.0;
    for (double v : estimates) mean += v;
    mean /= static_cast<double>(trials);
    double var = 0.0;
    for (double v : estimates) var += (v - mean) * (v - mean);
    var /= static_cast<double>(trials - 1);

    SimulationEstimate est;
    est.coherence_hat = mean;
    est.std_error = std::sqrt(var / static_cast<double>(trials));
    est.trials = trials;
    est.horizon = horizon;
    est.dt = dt;
    est.seed = seed;
    return est;
}

}  // namespace netcoh
