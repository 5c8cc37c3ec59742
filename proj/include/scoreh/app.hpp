#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scoreh/pipeline.hpp"
#include "scoreh/synth.hpp"

namespace scoreh::app {

inline constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

struct DetectArgs {
    std::string edges_path;
    std::optional<std::string> labels_path;
    PipelineConfig config;
    int repeats = 1;
    std::optional<std::string> dump_dir;
};

struct EvalArgs {
    std::string edges_path;
    std::string predicted_path;
    std::optional<std::string> truth_path;
};

struct SweepArgs {
    std::string edges_path;
    std::optional<std::string> labels_path;
    SweepSpec spec;
    PipelineConfig base;
    std::optional<std::string> csv_path;  // default: stdout
};

struct BenchArgs {
    std::vector<int> n_list;
    std::vector<double> mu_list;
    std::vector<Variant> variants;
    int repeats = 10;
    PlantedConfig planted;
    PipelineConfig base;
    std::optional<std::string> csv_path;
};

struct GenerateArgs {
    PlantedConfig planted;
    std::string out_prefix;  // writes <prefix>.nse and <prefix>.nmc
};

/// Load a graph (and optional ground-truth labels) from disk.
Graph load_graph(const std::string& edges_path,
                 const std::optional<std::string>& labels_path);

/// Detection result as the stable JSON document {labels, signal, metrics, manifest}.
nlohmann::json detect_report(const Graph& graph, const DetectArgs& args);

// Subcommand drivers; each writes its report to `out` and returns an exit code.
int run_detect(const DetectArgs& args, std::ostream& out, std::ostream& err);
int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

}  // namespace scoreh::app
