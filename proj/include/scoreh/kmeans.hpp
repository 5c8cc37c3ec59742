#pragma once

#include <cstdint>
#include <vector>

#include "scoreh/linalg.hpp"

namespace scoreh {

struct KmeansConfig {
    int k = 2;
    int restarts = 10;
    int max_iters = 300;
    double rel_tolerance = 1e-6;  // on inertia between Lloyd sweeps
    std::uint64_t seed = 42;
};

struct KmeansResult {
    std::vector<int> labels;  // in {0..k-1}
    double inertia = 0.0;
    int best_restart = 0;
};

/// Best-of-restarts Lloyd iteration with k-means++ seeding. Deterministic for
/// fixed (points, cfg). Assignment ties break toward the lowest centroid
/// index; an emptied cluster is reseeded at the point farthest from its own
/// centroid.
KmeansResult kmeans(const Matrix& points, const KmeansConfig& cfg);

}  // namespace scoreh
