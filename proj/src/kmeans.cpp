#include "scoreh/kmeans.hpp"

#include <cmath>
#include <limits>

#include "scoreh/rng.hpp"

namespace scoreh {

namespace {

double sq_dist(const Matrix& points, Eigen::Index i, const Vector& center) {
    return (points.row(i).transpose() - center).squaredNorm();
}

struct SingleRun {
    std::vector<int> labels;
    double inertia = std::numeric_limits<double>::infinity();
};

SingleRun lloyd_once(const Matrix& points, int k, int max_iters, double rel_tol, Rng& rng) {
    const Eigen::Index n = points.rows();
    const Eigen::Index d = points.cols();

    // k-means++ seeding
    Matrix centers(k, d);
    std::vector<double> min_d2(static_cast<std::size_t>(n),
                               std::numeric_limits<double>::infinity());
    centers.row(0) = points.row(static_cast<Eigen::Index>(rng.next_index(
        static_cast<std::size_t>(n))));
    for (int c = 1; c < k; ++c) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d2 = sq_dist(points, i, centers.row(c - 1).transpose());
            if (d2 < min_d2[static_cast<std::size_t>(i)])
                min_d2[static_cast<std::size_t>(i)] = d2;
        }
        centers.row(c) = points.row(static_cast<Eigen::Index>(rng.next_weighted(min_d2)));
    }

    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    double inertia = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < max_iters; ++iter) {
        // assignment, ties toward the lowest centroid index
        double total = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d2 = sq_dist(points, i, centers.row(0).transpose());
            for (int c = 1; c < k; ++c) {
                const double d2 = sq_dist(points, i, centers.row(c).transpose());
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = c;
                }
            }
            labels[static_cast<std::size_t>(i)] = best;
            total += best_d2;
        }

        // update
        Matrix sums = Matrix::Zero(k, d);
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            sums.row(labels[static_cast<std::size_t>(i)]) += points.row(i);
            ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
            } else {
                // reseed at the point farthest from its assigned centroid
                Eigen::Index far = 0;
                double far_d2 = -1.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double d2 = sq_dist(
                        points, i,
                        centers.row(labels[static_cast<std::size_t>(i)]).transpose());
                    if (d2 > far_d2) {
                        far_d2 = d2;
                        far = i;
                    }
                }
                centers.row(c) = points.row(far);
            }
        }

        const double prev = inertia;
        inertia = total;
        if (iter > 0 && std::abs(prev - inertia) <= rel_tol * std::max(inertia, 1e-300)) break;
    }

    return {std::move(labels), inertia};
}

}  // namespace

KmeansResult kmeans(const Matrix& points, const KmeansConfig& cfg) {
    const Eigen::Index n = points.rows();
    if (cfg.k < 1) throw InputError("kmeans: k must be at least 1");
    if (cfg.restarts < 1) throw InputError("kmeans: restarts must be at least 1");
    if (n < cfg.k) throw InputError("kmeans: fewer points than clusters");
    if (!points.allFinite()) throw InputError("kmeans: non-finite input");

    KmeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(derive_seed(cfg.seed, "kmeans-restart", static_cast<std::uint64_t>(r)));
        SingleRun run = lloyd_once(points, cfg.k, cfg.max_iters, cfg.rel_tolerance, rng);
        if (run.inertia < best.inertia ||
            (run.inertia == best.inertia && best.labels.empty())) {
            best.labels = std::move(run.labels);
            best.inertia = run.inertia;
            best.best_restart = r;
        }
    }
    return best;
}

}  // namespace scoreh
