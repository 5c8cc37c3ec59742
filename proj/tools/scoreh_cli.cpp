// Command-line front end: detect / eval / sweep / bench / generate.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scoreh/app.hpp"

namespace {

using namespace scoreh;
using namespace scoreh::app;

struct CommonPipelineFlags {
    std::string algo = "scoreh+";
    int k = 2;
    double sigma = 0.1;
    double t = 0.1;
    std::string rbf = "gaussian";
    double c = 0.1;
    bool auto_c = false;
    double beta = 0.0025;
    std::string ratio_mode = "raw";
    std::uint64_t seed = 42;
    int restarts = 10;
    int max_iters = 300;

    void attach(CLI::App* cmd, bool with_algo = true) {
        if (with_algo)
            cmd->add_option("--algo", algo, "Algorithm variant: sc|score|score+|scoreh+");
        cmd->add_option("--k", k, "Number of clusters")->required();
        cmd->add_option("--sigma", sigma, "Ridge regularization (default 0.1)");
        cmd->add_option("--t", t, "Weak-signal threshold in (0,1) (default 0.1)");
        cmd->add_option("--rbf", rbf, "Kernel: gaussian|mq|imq (default gaussian)");
        cmd->add_option("--c", c, "Shaping parameter (default 0.1)");
        cmd->add_flag("--auto-c", auto_c, "Pick c by condition-number minimization");
        cmd->add_option("--beta", beta, "Walk decay (default 0.0025)");
        cmd->add_option("--ratio-mode", ratio_mode, "raw|weighted (default raw)");
        cmd->add_option("--seed", seed, "Base RNG seed (default 42)");
        cmd->add_option("--restarts", restarts, "k-means restarts (default 10)");
        cmd->add_option("--max-iters", max_iters, "k-means iteration cap (default 300)");
    }

    PipelineConfig to_config() const {
        PipelineConfig cfg;
        cfg.variant = variant_from_string(algo);
        cfg.k = k;
        cfg.sigma = sigma;
        cfg.t = t;
        if (auto_c)
            cfg.rbf.reset();
        else
            cfg.rbf = RbfChoice{rbf_kind_from_string(rbf), c};
        cfg.katz.beta = beta;
        cfg.ratio_scaling = ratio_mode == "weighted" ? RatioScaling::EigenvalueWeighted
                                                     : RatioScaling::Raw;
        cfg.kmeans.seed = seed;
        cfg.kmeans.restarts = restarts;
        cfg.kmeans.max_iters = max_iters;
        return cfg;
    }
};

std::vector<double> parse_grid(const std::string& text) {
    // "lo:hi:count" or comma-separated values
    std::vector<double> grid;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const auto colon2 = text.find(':', colon + 1);
        if (colon2 == std::string::npos)
            throw InputError("grid must be lo:hi:count or comma-separated values");
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1, colon2 - colon - 1));
        const int count = std::stoi(text.substr(colon2 + 1));
        if (count < 1) throw InputError("grid count must be positive");
        for (int i = 0; i < count; ++i)
            grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    } else {
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ',')) grid.push_back(std::stod(cell));
    }
    if (grid.empty()) throw InputError("empty shaping grid");
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Community detection via spectral clustering on high-order proximities"};
    cli.require_subcommand(1);

    // ---- detect ----
    auto* detect_cmd = cli.add_subcommand("detect", "Run a detection and print JSON");
    std::string edges, labels, lfr_edges, lfr_labels, dump_dir;
    int repeats = 1;
    CommonPipelineFlags flags;
    detect_cmd->add_option("--edges", edges, "Edge-list file");
    detect_cmd->add_option("--lfr-edges", lfr_edges, "Edge list in .nse form (same parser)");
    detect_cmd->add_option("--labels", labels, "Ground-truth label file");
    detect_cmd->add_option("--lfr-labels", lfr_labels, "Labels in .nmc form (same parser)");
    detect_cmd->add_option("--repeats", repeats, "Aggregate metrics over derived seeds");
    detect_cmd->add_option("--dump-stages", dump_dir, "Write stage matrices as CSV here");
    flags.attach(detect_cmd);

    // ---- eval ----
    auto* eval_cmd = cli.add_subcommand("eval", "Score an existing labelling");
    std::string eval_edges, eval_pred, eval_truth;
    eval_cmd->add_option("--edges", eval_edges, "Edge-list file")->required();
    eval_cmd->add_option("--pred", eval_pred, "Predicted label file")->required();
    eval_cmd->add_option("--labels", eval_truth, "Ground-truth label file");

    // ---- sweep ----
    auto* sweep_cmd = cli.add_subcommand("sweep", "Kernel/shaping-parameter sweep (CSV)");
    std::string sweep_edges, sweep_labels, sweep_kinds = "gaussian,mq,imq";
    std::string sweep_grid = "0.001:1:100", sweep_objective = "nmi", sweep_out;
    int sweep_repeats = 10;
    CommonPipelineFlags sweep_flags;
    sweep_cmd->add_option("--edges", sweep_edges, "Edge-list file")->required();
    sweep_cmd->add_option("--labels", sweep_labels, "Ground-truth label file");
    sweep_cmd->add_option("--kinds", sweep_kinds, "Comma-separated kernel kinds");
    sweep_cmd->add_option("--grid", sweep_grid, "lo:hi:count or comma-separated c values");
    sweep_cmd->add_option("--objective", sweep_objective, "nmi|modularity");
    sweep_cmd->add_option("--repeats", sweep_repeats, "Runs per cell (default 10)");
    sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");
    sweep_flags.attach(sweep_cmd, /*with_algo=*/false);

    // ---- bench ----
    auto* bench_cmd = cli.add_subcommand("bench", "Synthetic benchmark matrix (CSV)");
    std::string bench_n = "200", bench_mu = "0.15,0.45,0.85";
    std::string bench_variants = "sc,score,score+,scoreh+", bench_out;
    int bench_repeats = 10, bench_k = 4;
    double bench_avg_degree = 10.0;
    CommonPipelineFlags bench_flags;
    bench_cmd->add_option("--n-list", bench_n, "Comma-separated node counts");
    bench_cmd->add_option("--mu-list", bench_mu, "Comma-separated mixing parameters");
    bench_cmd->add_option("--variants", bench_variants, "Comma-separated algorithm list");
    bench_cmd->add_option("--repeats", bench_repeats, "Repeats per cell (default 10)");
    bench_cmd->add_option("--communities", bench_k, "Planted community count (default 4)");
    bench_cmd->add_option("--avg-degree", bench_avg_degree, "Target average degree");
    bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");
    bench_cmd->add_option("--sigma", bench_flags.sigma, "Ridge regularization");
    bench_cmd->add_option("--t", bench_flags.t, "Weak-signal threshold");
    bench_cmd->add_option("--rbf", bench_flags.rbf, "Kernel for scoreh+");
    bench_cmd->add_option("--c", bench_flags.c, "Shaping parameter");
    bench_cmd->add_option("--beta", bench_flags.beta, "Walk decay");
    bench_cmd->add_option("--seed", bench_flags.seed, "Base seed");

    // ---- generate ----
    auto* gen_cmd = cli.add_subcommand("generate", "Write a planted-partition network");
    PlantedConfig planted;
    std::string out_prefix;
    gen_cmd->add_option("--n", planted.n, "Node count")->required();
    gen_cmd->add_option("--communities", planted.k, "Community count")->required();
    gen_cmd->add_option("--avg-degree", planted.avg_degree, "Target average degree");
    gen_cmd->add_option("--mu", planted.mu, "Mixing parameter in [0,1]");
    gen_cmd->add_option("--seed", planted.seed, "Seed");
    gen_cmd->add_option("--out-prefix", out_prefix, "Output prefix")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return cli.exit(e);  // --help
        cli.exit(e);
        return scoreh::app::kExitInputError;
    }

    try {
        if (*detect_cmd) {
            DetectArgs args;
            args.edges_path = !edges.empty() ? edges : lfr_edges;
            if (args.edges_path.empty()) {
                std::cerr << "input error: --edges (or --lfr-edges) is required\n";
                return kExitInputError;
            }
            if (!labels.empty())
                args.labels_path = labels;
            else if (!lfr_labels.empty())
                args.labels_path = lfr_labels;
            args.config = flags.to_config();
            args.repeats = repeats;
            if (!dump_dir.empty()) args.dump_dir = dump_dir;
            return run_detect(args, std::cout, std::cerr);
        }
        if (*eval_cmd) {
            EvalArgs args;
            args.edges_path = eval_edges;
            args.predicted_path = eval_pred;
            if (!eval_truth.empty()) args.truth_path = eval_truth;
            return run_eval(args, std::cout, std::cerr);
        }
        if (*sweep_cmd) {
            SweepArgs args;
            args.edges_path = sweep_edges;
            if (!sweep_labels.empty()) args.labels_path = sweep_labels;
            args.base = sweep_flags.to_config();
            args.spec.kinds.clear();
            std::stringstream ks(sweep_kinds);
            std::string kind;
            while (std::getline(ks, kind, ',')) args.spec.kinds.push_back(rbf_kind_from_string(kind));
            args.spec.grid = parse_grid(sweep_grid);
            args.spec.objective = sweep_objective == "modularity" ? SweepObjective::Modularity
                                                                  : SweepObjective::Nmi;
            args.spec.repeats = sweep_repeats;
            args.spec.seed = sweep_flags.seed;
            if (!sweep_out.empty()) args.csv_path = sweep_out;
            return run_sweep(args, std::cout, std::cerr);
        }
        if (*bench_cmd) {
            BenchArgs args;
            std::stringstream ns(bench_n), ms(bench_mu), vs(bench_variants);
            std::string cell;
            while (std::getline(ns, cell, ',')) args.n_list.push_back(std::stoi(cell));
            while (std::getline(ms, cell, ',')) args.mu_list.push_back(std::stod(cell));
            while (std::getline(vs, cell, ',')) args.variants.push_back(variant_from_string(cell));
            args.repeats = bench_repeats;
            args.planted.k = bench_k;
            args.planted.avg_degree = bench_avg_degree;
            args.planted.seed = bench_flags.seed;
            args.base = bench_flags.to_config();
            args.base.k = bench_k;
            if (!bench_out.empty()) args.csv_path = bench_out;
            return run_bench(args, std::cout, std::cerr);
        }
        if (*gen_cmd) {
            GenerateArgs args;
            args.planted = planted;
            args.out_prefix = out_prefix;
            return run_generate(args, std::cout, std::cerr);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
