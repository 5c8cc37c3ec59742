#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scoreh/graph.hpp"
#include "scoreh/pipeline.hpp"

namespace scoreh {

/// Planted-partition generator: k near-equal blocks; each drawn edge stub
/// stays inside its block with probability 1-mu and crosses to a uniformly
/// random node of another block with probability mu.
struct PlantedConfig {
    int n = 200;
    int k = 4;
    double avg_degree = 10.0;
    double mu = 0.15;  // fraction of edges between communities
    std::uint64_t seed = 42;
};

Graph generate_planted(const PlantedConfig& cfg);

enum class SweepObjective { Nmi, Modularity };

struct SweepSpec {
    std::vector<RbfKind> kinds{RbfKind::Gaussian, RbfKind::Multiquadric,
                               RbfKind::InverseMultiquadric};
    std::vector<double> grid;  // shaping values, shared across kinds
    SweepObjective objective = SweepObjective::Nmi;
    int repeats = 10;
    std::uint64_t seed = 42;
};

struct SweepRow {
    RbfKind kind = RbfKind::Gaussian;
    double c = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    int completed = 0;          // repeats that finished
    std::string error;          // first failure message when completed == 0
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int best_index = -1;        // argmax mean; ties to smaller c, then kind order

    const SweepRow& best() const;
};

/// Evaluate the objective over a (kind, c) grid, `repeats` runs per cell with
/// derived seeds; per-cell failures are recorded, not fatal.
SweepResult sweep(const Graph& graph, const SweepSpec& spec, const PipelineConfig& base);

struct BenchCell {
    int n = 0;
    double mu = 0.0;
};

struct BenchRow {
    int n = 0;
    double mu = 0.0;
    std::string variant;
    std::string metric;  // "nmi" or "modularity"
    double mean = 0.0;
    double variance = 0.0;
    double runtime_seconds = 0.0;
    int completed = 0;
};

/// Long-form results over synthetic networks: one generated graph per
/// (cell, repeat), every variant run on it, means and population variances
/// per metric.
std::vector<BenchRow> benchmark_matrix(const std::vector<BenchCell>& cells,
                                       const std::vector<Variant>& variants, int repeats,
                                       const PlantedConfig& base_planted,
                                       const PipelineConfig& base_pipeline);

}  // namespace scoreh
