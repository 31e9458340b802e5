// coherence.hpp — the network coherence metric and its spectral cross-check.

#pragma once

#include "netcoh/graph.hpp"

namespace netcoh {

/// Network coherence: half the trace of the Laplacian pseudoinverse.
/// Disconnected graphs carry the +infinity sentinel.
struct CoherenceValue {
    double value = 0.0;
    double trace_pinv = 0.0;

    bool finite() const;
};

/// Coherence via the pseudoinverse trace; infinity for disconnected graphs.
CoherenceValue coherence(const Graph& g);

/// Coherence via the spectrum: (1/2) sum_{i>=2} 1/lambda_i. Throws if g is
/// disconnected (lambda_2 below the rank cutoff).
CoherenceValue coherence_spectral(const Graph& g);

}  // namespace netcoh
