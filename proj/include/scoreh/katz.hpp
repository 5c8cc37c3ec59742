#pragma once

#include "scoreh/linalg.hpp"

namespace scoreh {

struct KatzConfig {
    double beta = 0.0025;  // walk decay per step; beta * spectral_radius(W) must stay below 1
};

/// Closed-form walk-sum proximity K = (I - beta W)^{-1} beta W, computed by
/// solving (I - beta W) K = beta W and symmetrizing the result.
/// Throws NumericalError when beta * spectral_radius(W) >= 1.
SymmetricMatrix katz(const SymmetricMatrix& w, const KatzConfig& cfg);

/// Truncated series sum_{p=1..terms} (beta W)^p by repeated multiplication.
/// Test oracle for `katz`; kept independent of the solve path.
SymmetricMatrix katz_series_oracle(const SymmetricMatrix& w, const KatzConfig& cfg,
                                   int terms);

}  // namespace scoreh
