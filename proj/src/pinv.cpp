#include "netcoh/pinv.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace netcoh {

namespace {

constexpr double kSymmetryTol = 1e-8;

void check_same_component(const PinvState& state, const IncidenceRow& row,
                          const char* op) {
    if (!state.components.same(row.u, row.v))
        throw std::invalid_argument(std::string(op) +
                                    ": endpoints lie in different components; "
                                    "use attach_update/attach_gain");
}

}  // namespace

PinvState pinv_symmetric(const Eigen::MatrixXd& L, ComponentSet components) {
    const int n = static_cast<int>(L.rows());
    if (L.cols() != n) throw std::invalid_argument("matrix must be square");
    if (static_cast<int>(components.label.size()) != n)
        throw std::invalid_argument("component labels do not cover all nodes");

    const double asym = (L - L.transpose()).cwiseAbs().maxCoeff();
    if (n > 0 && asym > kSymmetryTol)
        throw std::invalid_argument("matrix asymmetric beyond tolerance");

    // Off-diagonal structure must respect the partition.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (L(i, j) != 0.0 && components.label[i] != components.label[j])
                throw std::invalid_argument(
                    "components inconsistent with matrix zero pattern");

    PinvState state;
    state.lap = 0.5 * (L + L.transpose());
    state.components = std::move(components);

    if (n == 0) {
        state.pinv.resize(0, 0);
        return state;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(state.lap);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    const Eigen::VectorXd& lam = solver.eigenvalues();
    const Eigen::MatrixXd& vecs = solver.eigenvectors();

    const double lam_max = std::max(lam[n - 1], 0.0);
    const double tau =
        n * std::numeric_limits<double>::epsilon() * lam_max;
    if (lam[0] < -tau)
        throw std::invalid_argument("matrix has a negative eigenvalue: not PSD");

    Eigen::VectorXd inv_lam = Eigen::VectorXd::Zero(n);
    int rank = 0;
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
        if (lam[i] > tau) {
            inv_lam[i] = 1.0 / lam[i];
            trace += inv_lam[i];
            ++rank;
        }
    }
    if (rank != n - state.components.count)
        throw std::runtime_error(
            "numerical rank " + std::to_string(rank) + " disagrees with n - " +
            std::to_string(state.components.count) + " components");

    state.pinv = vecs * inv_lam.asDiagonal() * vecs.transpose();
    state.pinv = 0.5 * (state.pinv + state.pinv.transpose()).eval();
    state.trace = trace;
    state.rank = rank;
    return state;
}

PinvState pinv_of_graph(const Graph& g) {
    return pinv_symmetric(laplacian(g), connected_components(g));
}

PinvState refreshed(const PinvState& state) {
    return pinv_symmetric(state.lap, state.components);
}

double marginal_trace_decrease(const PinvState& state, const IncidenceRow& row) {
    check_same_component(state, row, "marginal_trace_decrease");
    const double s = row.scale;
    if (s == 0.0) return 0.0;

    const auto& P = state.pinv;
    const double quad =
        s * s * (P(row.u, row.u) + P(row.v, row.v) - 2.0 * P(row.u, row.v));
    const double beta = 1.0 + quad;
    if (beta <= 0.0)
        throw std::runtime_error("beta <= 0: pseudoinverse state corrupted");
    const double norm_sq =
        s * s * (P.col(row.u) - P.col(row.v)).squaredNorm();
    return norm_sq / beta;
}

PinvState rank_one_update(const PinvState& state, const IncidenceRow& row) {
    check_same_component(state, row, "rank_one_update");
    const double s = row.scale;
    if (s == 0.0) return state;

    const auto& P = state.pinv;
    const double quad =
        s * s * (P(row.u, row.u) + P(row.v, row.v) - 2.0 * P(row.u, row.v));
    const double beta = 1.0 + quad;
    if (beta <= 0.0)
        throw std::runtime_error("beta <= 0: pseudoinverse state corrupted");

    Eigen::VectorXd y = s * (P.col(row.u) - P.col(row.v));  // pinv * m

    PinvState next = state;
    next.pinv.noalias() -= (y * y.transpose()) / beta;
    next.trace = state.trace - y.squaredNorm() / beta;

    const double w = s * s;
    next.lap(row.u, row.u) += w;
    next.lap(row.v, row.v) += w;
    next.lap(row.u, row.v) -= w;
    next.lap(row.v, row.u) -= w;
    return next;
}

Eigen::VectorXd project_onto_nullspace(const PinvState& state,
                                       const IncidenceRow& row) {
    const int n = state.node_count();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    const auto& comps = state.components;
    const int cu = comps.label[row.u];
    const int cv = comps.label[row.v];
    if (cu == cv || row.scale == 0.0) return v;  // entries cancel within one component
    const double mean_u = row.scale / comps.size[cu];
    const double mean_v = -row.scale / comps.size[cv];
    for (int i = 0; i < n; ++i) {
        if (comps.label[i] == cu)
            v[i] = mean_u;
        else if (comps.label[i] == cv)
            v[i] = mean_v;
    }
    return v;
}

double attach_gain(const PinvState& state, const IncidenceRow& row) {
    const auto& comps = state.components;
    if (comps.same(row.u, row.v))
        throw std::invalid_argument(
            "attach_gain: endpoints share a component; use marginal_trace_decrease");
    const double s = row.scale;
    if (!(s > 0.0))
        throw std::invalid_argument("attach_gain requires a positive scale");

    const auto& P = state.pinv;
    const double quad =
        s * s * (P(row.u, row.u) + P(row.v, row.v) - 2.0 * P(row.u, row.v));
    const double denom = s * s * (1.0 / comps.size[comps.label[row.u]] +
                                  1.0 / comps.size[comps.label[row.v]]);
    return (1.0 + quad) / denom;
}

PinvState attach_update(const PinvState& state, const IncidenceRow& row) {
    if (state.components.same(row.u, row.v))
        throw std::invalid_argument(
            "attach_update: endpoints share a component; use rank_one_update");
    if (!(row.scale > 0.0))
        throw std::invalid_argument("attach_update requires a positive scale");

    Eigen::MatrixXd lap = state.lap;
    const double w = row.scale * row.scale;
    lap(row.u, row.u) += w;
    lap(row.v, row.v) += w;
    lap(row.u, row.v) -= w;
    lap(row.v, row.u) -= w;

    ComponentSet comps = state.components;
    comps.merge(row.u, row.v);
    return pinv_symmetric(lap, std::move(comps));
}

}  // namespace netcoh
