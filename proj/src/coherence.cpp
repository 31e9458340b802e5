#include "netcoh/coherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "netcoh/pinv.hpp"

namespace netcoh {

bool CoherenceValue::finite() const { return std::isfinite(value); }

CoherenceValue coherence(const Graph& g) {
    if (!is_connected(g)) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return CoherenceValue{inf, inf};
    }
    const PinvState state = pinv_of_graph(g);
    return CoherenceValue{0.5 * state.trace, state.trace};
}

CoherenceValue coherence_spectral(const Graph& g) {
    const Eigen::MatrixXd L = laplacian(g);
    const int n = g.node_count();
    if (n == 0) return CoherenceValue{0.0, 0.0};

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    const Eigen::VectorXd& lam = solver.eigenvalues();

    const double lam_max = std::max(lam[n - 1], 0.0);
    const double tau = n * std::numeric_limits<double>::epsilon() * lam_max;
    if (n > 1 && lam[1] <= tau)
        throw std::invalid_argument("coherence_spectral requires a connected graph");

    double trace = 0.0;
    for (int i = 1; i < n; ++i) trace += 1.0 / lam[i];
    return CoherenceValue{0.5 * trace, trace};
}

}  // namespace netcoh
