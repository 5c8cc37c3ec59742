#include "scoreh/app.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "scoreh/matrix_io.hpp"
#include "scoreh/metrics.hpp"
#include "scoreh/rng.hpp"

namespace scoreh::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest_hex(const std::string& content) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a64(content.data(), content.size());
    return os.str();
}

json config_json(const PipelineConfig& cfg) {
    json j;
    j["algo"] = to_string(cfg.variant);
    j["k"] = cfg.k;
    j["sigma"] = cfg.sigma;
    j["t"] = cfg.t;
    if (cfg.rbf) {
        j["rbf"] = to_string(cfg.rbf->kind);
        j["c"] = cfg.rbf->c;
    } else {
        j["rbf"] = "auto";
    }
    j["beta"] = cfg.katz.beta;
    j["ratio_mode"] = cfg.ratio_scaling == RatioScaling::Raw ? "raw" : "weighted";
    if (cfg.ratio_clamp) j["ratio_clamp"] = *cfg.ratio_clamp;
    j["seed"] = cfg.kmeans.seed;
    j["restarts"] = cfg.kmeans.restarts;
    j["max_iters"] = cfg.kmeans.max_iters;
    return j;
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json signal_json(const SignalReport& signal) {
    json j;
    j["classification"] = signal.classification == SignalClass::Weak ? "weak" : "strong";
    j["k_prime"] = signal.k_prime;
    j["gaps"] = json::array();
    for (double g : signal.gaps) j["gaps"].push_back(finite_or_null(g));
    return j;
}

void dump_stages(const DetectionResult& res, const std::string& dir) {
    fs::create_directories(dir);
    auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };
    write_matrix_csv(res.affinity, path("A.csv"));
    if (res.weighted.size() > 0) write_matrix_csv(res.weighted, path("W.csv"));
    if (res.proximity.size() > 0) write_matrix_csv(res.proximity, path("K.csv"));
    if (res.laplacian.size() > 0) write_matrix_csv(res.laplacian, path("L_sigma.csv"));
    write_vector_csv(res.selected.values, path("eigenvalues.csv"));
    write_matrix_csv(res.selected.vectors, path("eigenvectors.csv"));
    write_matrix_csv(res.features, path("features.csv"));
}

}  // namespace

Graph load_graph(const std::string& edges_path,
                 const std::optional<std::string>& labels_path) {
    std::ifstream in(edges_path);
    if (!in) throw InputError("cannot open edge list: " + edges_path);
    Graph g = parse_edge_list(in);
    if (labels_path) {
        std::ifstream lin(*labels_path);
        if (!lin) throw InputError("cannot open label file: " + *labels_path);
        g.ground_truth = parse_labels(lin, g, /*allow_new_nodes=*/true);
    }
    return g;
}

json detect_report(const Graph& graph, const DetectArgs& args) {
    const DetectionResult res = detect(graph, args.config);

    json report;
    report["labels"] = res.labels;
    report["signal"] = signal_json(res.signal);

    json metrics;
    metrics["modularity"] = modularity(graph, Partition::from_labels(res.labels));
    if (graph.ground_truth) {
        metrics["nmi"] = nmi(Partition::from_labels(res.labels),
                             Partition::from_labels(*graph.ground_truth));
    }
    report["metrics"] = metrics;

    json manifest;
    manifest["version"] = kToolVersion;
    manifest["config"] = config_json(args.config);
    if (res.rbf_used) {
        manifest["config"]["rbf_resolved"] = to_string(res.rbf_used->kind);
        manifest["config"]["c_resolved"] = res.rbf_used->c;
    }
    json inputs;
    inputs["edges"] = args.edges_path;
    inputs["edges_digest"] = digest_hex(read_file(args.edges_path));
    if (args.labels_path) {
        inputs["labels"] = *args.labels_path;
        inputs["labels_digest"] = digest_hex(read_file(*args.labels_path));
    }
    manifest["inputs"] = inputs;
    json conds;
    for (const auto& [stage, value] : res.stages.condition_numbers)
        conds[stage] = finite_or_null(value);
    manifest["condition_numbers"] = conds;
    json timings;
    for (const auto& [stage, value] : res.stages.timings_ms) timings[stage] = value;
    manifest["timings_ms"] = timings;
    manifest["node_order"] = res.node_order;
    manifest["kmeans_inertia"] = res.kmeans_inertia;
    report["manifest"] = manifest;

    if (args.dump_dir) dump_stages(res, *args.dump_dir);
    return report;
}

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
}

}  // namespace

int run_detect(const DetectArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph graph = load_graph(args.edges_path, args.labels_path);
        if (args.repeats <= 1) {
            out << detect_report(graph, args).dump(2) << "\n";
            return kExitOk;
        }

        // repeat mode: aggregate metrics over derived seeds as mean (variance)
        std::vector<double> mods, nmis;
        json last;
        for (int rep = 0; rep < args.repeats; ++rep) {
            DetectArgs one = args;
            one.repeats = 1;
            one.dump_dir.reset();
            one.config.kmeans.seed =
                derive_seed(args.config.kmeans.seed, "repeat", static_cast<std::uint64_t>(rep));
            last = detect_report(graph, one);
            mods.push_back(last["metrics"]["modularity"].get<double>());
            if (last["metrics"].contains("nmi"))
                nmis.push_back(last["metrics"]["nmi"].get<double>());
        }
        auto stats = [](const std::vector<double>& v) {
            double mean = 0.0;
            for (double x : v) mean += x;
            mean /= static_cast<double>(v.size());
            double var = 0.0;
            for (double x : v) var += (x - mean) * (x - mean);
            var /= static_cast<double>(v.size());
            return std::pair<double, double>(mean, var);
        };
        json agg;
        agg["repeats"] = args.repeats;
        const auto [qm, qv] = stats(mods);
        agg["metrics"]["modularity"] = {{"mean", qm}, {"variance", qv}};
        if (!nmis.empty()) {
            const auto [nm, nv] = stats(nmis);
            agg["metrics"]["nmi"] = {{"mean", nm}, {"variance", nv}};
        }
        agg["last_run"] = last;
        out << agg.dump(2) << "\n";
        return kExitOk;
    });
}

int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Graph graph = load_graph(args.edges_path, std::nullopt);
        std::ifstream pin(args.predicted_path);
        if (!pin) throw InputError("cannot open label file: " + args.predicted_path);
        const Partition predicted =
            Partition::from_labels(parse_labels(pin, graph, /*allow_new_nodes=*/true));

        json j;
        j["modularity"] = modularity(graph, predicted);
        if (args.truth_path) {
            std::ifstream tin(*args.truth_path);
            if (!tin) throw InputError("cannot open label file: " + *args.truth_path);
            const Partition truth =
                Partition::from_labels(parse_labels(tin, graph, /*allow_new_nodes=*/true));
            j["nmi"] = nmi(predicted, truth);
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    });
}

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph graph = load_graph(args.edges_path, args.labels_path);
        const SweepResult result = sweep(graph, args.spec, args.base);

        std::ostringstream csv;
        csv << std::setprecision(17);
        csv << "kind,c,mean,variance,completed\n";
        for (const SweepRow& row : result.rows) {
            csv << to_string(row.kind) << ',' << row.c << ',' << row.mean << ','
                << row.variance << ',' << row.completed << '\n';
        }
        if (args.csv_path) {
            std::ofstream f(*args.csv_path);
            if (!f) throw InputError("cannot open for writing: " + *args.csv_path);
            f << csv.str();
        } else {
            out << csv.str();
        }

        const SweepRow& best = result.best();
        json j;
        j["best"] = {{"kind", to_string(best.kind)},
                     {"c", best.c},
                     {"mean", best.mean},
                     {"variance", best.variance}};
        err << j.dump() << "\n";  // summary on stderr so stdout stays pure CSV
        return kExitOk;
    });
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<BenchCell> cells;
        for (int n : args.n_list)
            for (double mu : args.mu_list) cells.push_back({n, mu});
        const auto rows =
            benchmark_matrix(cells, args.variants, args.repeats, args.planted, args.base);

        std::ostringstream csv;
        csv << std::setprecision(17);
        csv << "n,mu,variant,metric,mean,variance,runtime_seconds\n";
        for (const BenchRow& row : rows) {
            csv << row.n << ',' << row.mu << ',' << row.variant << ',' << row.metric << ','
                << row.mean << ',' << row.variance << ',' << row.runtime_seconds << '\n';
        }
        if (args.csv_path) {
            std::ofstream f(*args.csv_path);
            if (!f) throw InputError("cannot open for writing: " + *args.csv_path);
            f << csv.str();
        } else {
            out << csv.str();
        }
        return kExitOk;
    });
}

int run_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph g = generate_planted(args.planted);
        const std::string edges_path = args.out_prefix + ".nse";
        const std::string labels_path = args.out_prefix + ".nmc";
        std::ofstream eout(edges_path);
        if (!eout) throw InputError("cannot open for writing: " + edges_path);
        serialize_edge_list(g, eout);
        std::ofstream lout(labels_path);
        if (!lout) throw InputError("cannot open for writing: " + labels_path);
        for (int i = 0; i < g.n; ++i)
            lout << g.names[static_cast<std::size_t>(i)] << ' '
                 << (*g.ground_truth)[static_cast<std::size_t>(i)] + 1 << '\n';

        json j;
        j["edges"] = edges_path;
        j["labels"] = labels_path;
        j["n"] = g.n;
        j["m"] = g.m();
        out << j.dump(2) << "\n";
        return kExitOk;
    });
}

}  // namespace scoreh::app
