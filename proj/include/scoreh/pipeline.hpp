#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scoreh/graph.hpp"
#include "scoreh/katz.hpp"
#include "scoreh/kmeans.hpp"
#include "scoreh/linalg.hpp"
#include "scoreh/rbf.hpp"

namespace scoreh {

enum class Variant { SC, SCORE, SCOREPlus, SCOREHPlus };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

enum class RatioScaling { Raw, EigenvalueWeighted };

struct PipelineConfig {
    Variant variant = Variant::SCOREHPlus;
    int k = 2;
    double sigma = 0.1;           // ridge regularization
    double t = 0.1;               // weak-signal threshold, in (0,1)
    std::optional<RbfChoice> rbf = RbfChoice{RbfKind::Gaussian, 0.1};  // nullopt => auto-select
    KatzConfig katz;
    RatioScaling ratio_scaling = RatioScaling::Raw;
    std::optional<double> ratio_clamp;  // clip ratios to [-T, T] when set
    KmeansConfig kmeans;
    int max_nodes = 20000;

    void validate() const;
};

enum class SignalClass { Weak, Strong };

/// Eigen-gap report on the classification spectrum. gaps[j] = 1 - l_{k+1+j}/l_{k+j}
/// for the successive pairs after the k-th eigenvalue (as many as available).
struct SignalReport {
    std::vector<double> gaps;
    SignalClass classification = SignalClass::Strong;
    int k_prime = 0;
};

struct StageDiagnostics {
    std::map<std::string, double> condition_numbers;  // per stage: A, W, K, L
    std::map<std::string, double> timings_ms;
};

struct DetectionResult {
    std::vector<int> labels;
    SignalReport signal;
    StageDiagnostics stages;
    std::optional<RbfChoice> rbf_used;  // resolved kernel (after auto-selection)
    Variant variant = Variant::SCOREHPlus;
    double kmeans_inertia = 0.0;

    // intermediates retained for diagnostics and stage dumps
    Matrix affinity;
    Matrix weighted;      // W (empty for variants that skip the kernel)
    Matrix proximity;     // K (empty for variants that skip the walk sum)
    Matrix laplacian;     // L_sigma (empty for SCORE)
    EigenBundle selected; // top-(k+1) by magnitude, algebraic order (top-k for SC)
    Matrix features;
    std::vector<std::string> node_order;
};

/// Ridge-regularized degree normalization
///   L = (D + sigma*d_max*I)^{-1/2} K (D + sigma*d_max*I)^{-1/2}
/// with D = diag(row sums of K) and d_max = max row sum.
SymmetricMatrix regularized_laplacian(const SymmetricMatrix& k, double sigma);

/// Weak/strong decision from eigenvalues sorted by descending algebraic value
/// (magnitude-selected upstream). Weak iff l_{k+1} > 0, l_k > 0 and
/// l_{k+1}/l_k >= 1 - t; then k' = k+1, else k' = k. A negative l_{k+1}
/// always classifies strong.
SignalReport classify_signal(const Vector& algebraic_desc, int k, double t);

/// Entrywise ratios of the retained eigenvector columns against the leading
/// column (largest algebraic eigenvalue). Denominator entries below 1e-8 in
/// magnitude are replaced by sign-preserving 1e-8. Output is n x (k'-1).
Matrix ratio_features(const EigenBundle& retained, RatioScaling scaling,
                      std::optional<double> clamp);

/// Full variant dispatch ending in k-means labels.
DetectionResult detect(const Graph& graph, const PipelineConfig& cfg);

}  // namespace scoreh
