#include "scoreh/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace scoreh {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::SC: return "sc";
        case Variant::SCORE: return "score";
        case Variant::SCOREPlus: return "score+";
        case Variant::SCOREHPlus: return "scoreh+";
    }
    return "?";
}

Variant variant_from_string(const std::string& name) {
    if (name == "sc") return Variant::SC;
    if (name == "score") return Variant::SCORE;
    if (name == "score+" || name == "scorep") return Variant::SCOREPlus;
    if (name == "scoreh+" || name == "scorehp") return Variant::SCOREHPlus;
    throw InputError("unknown algorithm \"" + name + "\" (expected sc|score|score+|scoreh+)");
}

void PipelineConfig::validate() const {
    if (k < 2) throw InputError("pipeline: k must be at least 2");
    if (t <= 0.0 || t >= 1.0) throw InputError("pipeline: t must lie in (0,1)");
    if (sigma < 0.0) throw InputError("pipeline: sigma must be non-negative");
    if (rbf) rbf->validate();
}

SymmetricMatrix regularized_laplacian(const SymmetricMatrix& k, double sigma) {
    if (sigma < 0.0) throw InputError("regularized_laplacian: sigma must be non-negative");
    if (!k.mat().allFinite())
        throw NumericalError("regularized_laplacian: non-finite entries");
    const Eigen::Index n = k.order();
    const Vector row_sums = k.mat().rowwise().sum();
    const double d_max = row_sums.maxCoeff();
    Vector scale(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = row_sums(i) + sigma * d_max;
        if (d <= 0.0) {
            std::ostringstream os;
            os << "regularized_laplacian: non-positive regularized degree at node " << i;
            throw NumericalError(os.str());
        }
        scale(i) = 1.0 / std::sqrt(d);
    }
    Matrix l = scale.asDiagonal() * k.mat() * scale.asDiagonal();
    return SymmetricMatrix::from(std::move(l));
}

SignalReport classify_signal(const Vector& algebraic_desc, int k, double t) {
    if (k < 1) throw InputError("classify_signal: k must be at least 1");
    if (algebraic_desc.size() < k + 1)
        throw InputError("classify_signal: need at least k+1 eigenvalues");

    SignalReport report;
    for (Eigen::Index j = k; j < algebraic_desc.size() && j < k + 3; ++j) {
        const double prev = algebraic_desc(j - 1);
        const double cur = algebraic_desc(j);
        report.gaps.push_back(prev != 0.0 ? 1.0 - cur / prev
                                          : std::numeric_limits<double>::quiet_NaN());
    }
    const double lk = algebraic_desc(k - 1);
    const double lk1 = algebraic_desc(k);
    const bool weak = lk1 > 0.0 && lk > 0.0 && lk1 / lk >= 1.0 - t;
    report.classification = weak ? SignalClass::Weak : SignalClass::Strong;
    report.k_prime = weak ? k + 1 : k;
    return report;
}

Matrix ratio_features(const EigenBundle& retained, RatioScaling scaling,
                      std::optional<double> clamp) {
    const Eigen::Index kp = retained.count();
    if (kp < 2) throw InputError("ratio_features: need at least 2 retained eigenpairs");

    Matrix cols = retained.vectors;
    if (scaling == RatioScaling::EigenvalueWeighted)
        cols = cols * retained.values.asDiagonal();

    Vector denom = cols.col(0);
    for (Eigen::Index i = 0; i < denom.size(); ++i) {
        if (std::abs(denom(i)) < 1e-12) {
            denom(i) = 1e-8;  // numerically zero, sign is round-off noise
        } else if (std::abs(denom(i)) < 1e-8) {
            denom(i) = denom(i) >= 0.0 ? 1e-8 : -1e-8;
        }
    }

    Matrix features(cols.rows(), kp - 1);
    for (Eigen::Index j = 1; j < kp; ++j)
        features.col(j - 1) = cols.col(j).cwiseQuotient(denom);

    if (clamp) {
        const double bound = *clamp;
        features = features.cwiseMax(-bound).cwiseMin(bound);
    }
    return features;
}

namespace {

class StageTimer {
public:
    explicit StageTimer(StageDiagnostics& diag) : diag_(diag) {}
    template <typename F>
    auto run(const std::string& stage, F&& fn) -> decltype(fn()) {
        const auto start = std::chrono::steady_clock::now();
        try {
            auto out = fn();
            record(stage, start);
            return out;
        } catch (const InputError&) {
            throw;
        } catch (const NumericalError& e) {
            throw NumericalError(stage, e.what());
        }
    }

private:
    void record(const std::string& stage,
                std::chrono::steady_clock::time_point start) {
        const auto end = std::chrono::steady_clock::now();
        diag_.timings_ms[stage] =
            std::chrono::duration<double, std::milli>(end - start).count();
    }
    StageDiagnostics& diag_;
};

// Retained pairs for the feature stage: from the magnitude-selected bundle
// (algebraic descending), keep the k' algebraically largest.
EigenBundle retain_prefix(const EigenBundle& selected, int k_prime) {
    EigenBundle out;
    out.rule = selected.rule;
    out.values = selected.values.head(k_prime);
    out.vectors = selected.vectors.leftCols(k_prime);
    return out;
}

}  // namespace

DetectionResult detect(const Graph& graph, const PipelineConfig& cfg) {
    cfg.validate();
    if (cfg.k > graph.n) throw InputError("detect: k exceeds node count");

    DetectionResult result;
    result.variant = cfg.variant;
    result.node_order = graph.names;
    StageTimer timer(result.stages);

    const AffinityMatrix aff = timer.run("affinity", [&] {
        return affinity(graph, cfg.max_nodes);
    });
    result.affinity = aff.a;
    result.stages.condition_numbers["A"] = condition_number(aff.a);

    const bool high_order = cfg.variant == Variant::SCOREHPlus;

    // Stage W: kernel-masked affinity for the high-order chain, A otherwise.
    SymmetricMatrix w = SymmetricMatrix::from(aff.a);
    if (high_order) {
        RbfChoice choice;
        if (cfg.rbf) {
            choice = *cfg.rbf;
        } else {
            choice = timer.run("select-c", [&] {
                return select_shaping_parameter(aff, RbfKind::Gaussian,
                                                default_shaping_grid());
            }).choice;
        }
        result.rbf_used = choice;
        w = timer.run("rbf", [&] { return masked_rbf_matrix(aff, choice); });
        result.weighted = w.mat();
        result.stages.condition_numbers["W"] = condition_number(w.mat());
    }

    // Stage K: walk-sum proximity for the high-order chain.
    SymmetricMatrix proximity = w;
    if (high_order) {
        proximity = timer.run("katz", [&] { return katz(w, cfg.katz); });
        result.proximity = proximity.mat();
        result.stages.condition_numbers["K"] = condition_number(proximity.mat());
    }

    // Classification spectrum: the matrix the normalization is built from
    // (walk-sum proximity for the high-order chain, the affinity otherwise).
    const int diag_count = std::min(cfg.k + 3, graph.n);
    const EigenBundle class_spectrum = timer.run("classify", [&] {
        EigenBundle full = eig_symmetric(proximity);
        return top_by_magnitude(full, diag_count);
    });
    result.signal = classify_signal(class_spectrum.values, cfg.k, cfg.t);

    // Eigen stage.
    EigenBundle full;
    if (cfg.variant == Variant::SCORE) {
        full = timer.run("eig", [&] { return eig_symmetric(SymmetricMatrix::from(aff.a)); });
    } else {
        const SymmetricMatrix l = timer.run("laplacian", [&] {
            return regularized_laplacian(proximity, cfg.sigma);
        });
        result.laplacian = l.mat();
        result.stages.condition_numbers["L"] = condition_number(l.mat());
        full = timer.run("eig", [&] { return eig_symmetric(l); });
    }

    // Feature stage. SC keeps the top-k eigenvectors directly; SCORE never
    // retains the extra vector; the + variants follow the signal report.
    Matrix points;
    if (cfg.variant == Variant::SC) {
        result.selected = top_by_magnitude(full, std::min(cfg.k, graph.n));
        result.signal.k_prime = cfg.k;
        points = result.selected.vectors;
    } else {
        if (cfg.variant == Variant::SCORE) result.signal.k_prime = cfg.k;
        const int k_prime = result.signal.k_prime;
        result.selected = top_by_magnitude(full, std::min(cfg.k + 1, graph.n));
        const EigenBundle retained = retain_prefix(result.selected, k_prime);
        points = timer.run("features", [&] {
            return ratio_features(retained, cfg.ratio_scaling, cfg.ratio_clamp);
        });
    }
    result.features = points;

    KmeansConfig km = cfg.kmeans;
    km.k = cfg.k;
    const KmeansResult clustering = timer.run("kmeans", [&] { return kmeans(points, km); });
    result.labels = clustering.labels;
    result.kmeans_inertia = clustering.inertia;
    return result;
}

}  // namespace scoreh
