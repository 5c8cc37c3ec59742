#include "scoreh/synth.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "scoreh/metrics.hpp"
#include "scoreh/rng.hpp"
#include "scoreh/threads.hpp"

namespace scoreh {

Graph generate_planted(const PlantedConfig& cfg) {
    if (cfg.n < 2) throw InputError("generate_planted: need at least 2 nodes");
    if (cfg.k < 1 || cfg.k > cfg.n) throw InputError("generate_planted: k must be in [1, n]");
    if (cfg.mu < 0.0 || cfg.mu > 1.0) throw InputError("generate_planted: mu must be in [0,1]");
    if (cfg.avg_degree <= 0.0 || cfg.avg_degree >= cfg.n)
        throw InputError("generate_planted: average degree must be in (0, n)");

    // equal block sizes, remainder to the last block
    const int base_size = cfg.n / cfg.k;
    if (base_size < 1) throw InputError("generate_planted: blocks would be empty");
    std::vector<int> block(static_cast<std::size_t>(cfg.n));
    std::vector<std::vector<int>> members(static_cast<std::size_t>(cfg.k));
    for (int i = 0; i < cfg.n; ++i) {
        const int b = std::min(i / base_size, cfg.k - 1);
        block[static_cast<std::size_t>(i)] = b;
        members[static_cast<std::size_t>(b)].push_back(i);
    }

    Rng rng(derive_seed(cfg.seed, "planted", static_cast<std::uint64_t>(cfg.n),
                        static_cast<std::uint64_t>(cfg.k)));

    // Node ids are shuffled so the emitted ordering carries no information
    // about the planted blocks.
    std::vector<int> perm(static_cast<std::size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = cfg.n - 1; i > 0; --i) {
        const auto j = rng.next_index(static_cast<std::size_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    const auto target_edges =
        static_cast<std::size_t>(std::llround(cfg.n * cfg.avg_degree / 2.0));
    std::set<std::pair<int, int>> edges;

    std::size_t placed = 0;
    for (std::size_t stub = 0; stub < target_edges; ++stub) {
        const int u = static_cast<int>(stub % static_cast<std::size_t>(cfg.n));
        const auto& own = members[static_cast<std::size_t>(block[static_cast<std::size_t>(u)])];
        bool ok = false;
        for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
            int v;
            if (!rng.bernoulli(cfg.mu)) {
                if (own.size() < 2) break;  // no possible intra partner
                v = own[rng.next_index(own.size())];
            } else {
                if (own.size() == static_cast<std::size_t>(cfg.n)) break;  // k == 1
                do {
                    v = static_cast<int>(rng.next_index(static_cast<std::size_t>(cfg.n)));
                } while (block[static_cast<std::size_t>(v)] ==
                         block[static_cast<std::size_t>(u)]);
            }
            if (v == u) continue;
            const auto e = std::minmax(perm[static_cast<std::size_t>(u)],
                                       perm[static_cast<std::size_t>(v)]);
            if (edges.insert({e.first, e.second}).second) {
                ok = true;
                ++placed;
            }
        }
    }
    if (placed == 0) throw InputError("generate_planted: infeasible configuration, no edges placed");

    Graph g;
    g.n = cfg.n;
    g.edges.assign(edges.begin(), edges.end());
    g.names.reserve(static_cast<std::size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) g.names.push_back(std::to_string(i + 1));
    std::vector<int> truth(static_cast<std::size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i)
        truth[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            block[static_cast<std::size_t>(i)];
    g.ground_truth = truth;
    return g;
}

const SweepRow& SweepResult::best() const {
    if (best_index < 0) throw NumericalError("sweep produced no successful cells");
    return rows[static_cast<std::size_t>(best_index)];
}

namespace {

struct Accumulated {
    double mean = 0.0;
    double variance = 0.0;
    int completed = 0;
    std::string first_error;
};

Accumulated accumulate(const std::vector<double>& values, const std::string& err) {
    Accumulated out;
    out.first_error = err;
    out.completed = static_cast<int>(values.size());
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.variance = ss / static_cast<double>(values.size());  // population variance
    return out;
}

int kind_rank(RbfKind k) {
    switch (k) {
        case RbfKind::Gaussian: return 0;
        case RbfKind::Multiquadric: return 1;
        case RbfKind::InverseMultiquadric: return 2;
    }
    return 3;
}

}  // namespace

SweepResult sweep(const Graph& graph, const SweepSpec& spec, const PipelineConfig& base) {
    if (spec.grid.empty()) throw InputError("sweep: empty shaping grid");
    if (spec.repeats < 1) throw InputError("sweep: repeats must be at least 1");
    if (spec.objective == SweepObjective::Nmi && !graph.ground_truth)
        throw InputError("sweep: NMI objective requires ground-truth labels");

    std::optional<Partition> truth;
    if (graph.ground_truth) truth = Partition::from_labels(*graph.ground_truth);

    struct Cell {
        RbfKind kind;
        std::size_t c_index;
    };
    std::vector<Cell> cells;
    for (const RbfKind kind : spec.kinds)
        for (std::size_t ci = 0; ci < spec.grid.size(); ++ci) cells.push_back({kind, ci});

    SweepResult out;
    out.rows.resize(cells.size());

    parallel_for(cells.size(), [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        const double c = spec.grid[cell.c_index];
        SweepRow row;
        row.kind = cell.kind;
        row.c = c;
        std::vector<double> values;
        std::string first_error;
        for (int rep = 0; rep < spec.repeats; ++rep) {
            PipelineConfig cfg = base;
            cfg.variant = Variant::SCOREHPlus;
            cfg.rbf = RbfChoice{cell.kind, c};
            cfg.kmeans.seed = derive_seed(spec.seed, to_string(cell.kind),
                                          static_cast<std::uint64_t>(cell.c_index),
                                          static_cast<std::uint64_t>(rep));
            try {
                const DetectionResult res = detect(graph, cfg);
                const Partition p = Partition::from_labels(res.labels);
                const double value = spec.objective == SweepObjective::Nmi
                                         ? nmi(p, *truth)
                                         : modularity(graph, p);
                values.push_back(value);
            } catch (const std::exception& e) {
                if (first_error.empty()) first_error = e.what();
            }
        }
        const Accumulated acc = accumulate(values, first_error);
        row.mean = acc.mean;
        row.variance = acc.variance;
        row.completed = acc.completed;
        row.error = acc.completed == 0 ? acc.first_error : "";
        out.rows[idx] = row;
    });

    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        const SweepRow& row = out.rows[i];
        if (row.completed == 0) continue;
        if (out.best_index < 0) {
            out.best_index = static_cast<int>(i);
            continue;
        }
        const SweepRow& cur = out.rows[static_cast<std::size_t>(out.best_index)];
        const bool better =
            row.mean > cur.mean ||
            (row.mean == cur.mean &&
             (row.c < cur.c ||
              (row.c == cur.c && kind_rank(row.kind) < kind_rank(cur.kind))));
        if (better) out.best_index = static_cast<int>(i);
    }
    return out;
}

std::vector<BenchRow> benchmark_matrix(const std::vector<BenchCell>& cells,
                                       const std::vector<Variant>& variants, int repeats,
                                       const PlantedConfig& base_planted,
                                       const PipelineConfig& base_pipeline) {
    if (repeats < 1) throw InputError("benchmark_matrix: repeats must be at least 1");
    std::vector<BenchRow> rows;
    if (variants.empty()) return rows;

    struct Job {
        BenchCell cell;
        Variant variant;
    };
    std::vector<Job> jobs;
    for (const BenchCell& cell : cells)
        for (const Variant v : variants) jobs.push_back({cell, v});

    std::vector<std::array<BenchRow, 2>> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t idx) {
        const Job& job = jobs[idx];
        std::vector<double> nmis, mods;
        std::string first_error;
        const auto start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < repeats; ++rep) {
            PlantedConfig pc = base_planted;
            pc.n = job.cell.n;
            pc.mu = job.cell.mu;
            pc.seed = derive_seed(base_planted.seed, "bench-graph",
                                  static_cast<std::uint64_t>(job.cell.n * 1000) +
                                      static_cast<std::uint64_t>(job.cell.mu * 1e6),
                                  static_cast<std::uint64_t>(rep));
            try {
                const Graph g = generate_planted(pc);
                PipelineConfig cfg = base_pipeline;
                cfg.variant = job.variant;
                cfg.k = pc.k;
                cfg.kmeans.seed = derive_seed(pc.seed, to_string(job.variant),
                                              static_cast<std::uint64_t>(rep));
                const DetectionResult res = detect(g, cfg);
                const Partition p = Partition::from_labels(res.labels);
                nmis.push_back(nmi(p, Partition::from_labels(*g.ground_truth)));
                mods.push_back(modularity(g, p));
            } catch (const std::exception& e) {
                if (first_error.empty()) first_error = e.what();
            }
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const Accumulated an = accumulate(nmis, first_error);
        const Accumulated am = accumulate(mods, first_error);
        for (int which = 0; which < 2; ++which) {
            BenchRow row;
            row.n = job.cell.n;
            row.mu = job.cell.mu;
            row.variant = to_string(job.variant);
            row.metric = which == 0 ? "nmi" : "modularity";
            const Accumulated& acc = which == 0 ? an : am;
            row.mean = acc.mean;
            row.variance = acc.variance;
            row.completed = acc.completed;
            row.runtime_seconds = seconds;
            results[idx][static_cast<std::size_t>(which)] = row;
        }
    });

    for (const auto& pair : results)
        for (const BenchRow& row : pair) rows.push_back(row);
    return rows;
}

}  // namespace scoreh
