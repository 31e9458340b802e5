// pinv.hpp — maintained Laplacian pseudoinverse: eigendecomposition-based
// construction, the rank-preserving Sherman-Morrison-style update for edges
// inside one component, and the rank-increasing attach formulas for edges
// joining two components.

#pragma once

#include <Eigen/Core>

#include "netcoh/graph.hpp"

namespace netcoh {

/// Dense pseudoinverse of the current Laplacian plus the bookkeeping needed
/// to update it: the Laplacian itself (for refreshes and attach recomputes),
/// the maintained trace, rank, and the component partition.
struct PinvState {
    Eigen::MatrixXd pinv;
    Eigen::MatrixXd lap;
    double trace = 0.0;
    int rank = 0;
    ComponentSet components;

    int node_count() const { return static_cast<int>(lap.rows()); }
};

/// Pseudoinverse of a symmetric PSD matrix via full eigendecomposition.
/// Eigenvalues below tau = n * eps * lambda_max are treated as zero.
/// Throws if L is asymmetric beyond 1e-8, has an eigenvalue below -tau, or
/// its numerical rank disagrees with n - components.count.
PinvState pinv_symmetric(const Eigen::MatrixXd& L, ComponentSet components);

/// Convenience: assemble the Laplacian and components of g and invert.
PinvState pinv_of_graph(const Graph& g);

/// Recomputes the pseudoinverse from the stored Laplacian (drift control).
PinvState refreshed(const PinvState& state);

/// Trace decrease caused by adding `row` inside one component, in O(n):
/// (1/beta) * ||pinv m||^2 with beta = 1 + m^T pinv m. Does not mutate.
/// Throws if the endpoints lie in different components.
double marginal_trace_decrease(const PinvState& state, const IncidenceRow& row);

/// Applies the rank-preserving update pinv' = pinv - (1/beta)(pinv m)(pinv m)^T
/// for an edge inside one component; O(n^2). Rank and components unchanged.
PinvState rank_one_update(const PinvState& state, const IncidenceRow& row);

/// (I - L L^+) m: the projection of the dense incidence vector onto the
/// Laplacian null space, i.e. m's per-component means replicated. Zero for
/// rows inside a single component.
Eigen::VectorXd project_onto_nullspace(const PinvState& state,
                                       const IncidenceRow& row);

/// Trace increase (1 + m^T pinv m) / ||(I - L L^+) m||^2 caused by adding a
/// rank-increasing edge between two components. Does not mutate. Throws if
/// the endpoints share a component or scale is not positive.
double attach_gain(const PinvState& state, const IncidenceRow& row);

/// Adds a rank-increasing edge: merges the two components, bumps the rank,
/// and recomputes the pseudoinverse from the updated Laplacian.
PinvState attach_update(const PinvState& state, const IncidenceRow& row);

}  // namespace netcoh
