#include "scoreh/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace scoreh {

SymmetricMatrix SymmetricMatrix::from(Matrix m) {
    if (m.rows() != m.cols()) throw InputError("symmetric matrix must be square");
    if (!m.allFinite()) throw NumericalError("matrix has non-finite entries");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            const double a = m(i, j), b = m(j, i);
            const double budget = 1e-12 * std::max(1.0, std::abs(a));
            if (std::abs(a - b) > budget) {
                std::ostringstream os;
                os << "asymmetry " << std::abs(a - b) << " at (" << i << "," << j
                   << ") exceeds tolerance " << budget;
                throw NumericalError(os.str());
            }
        }
    }
    Matrix sym = 0.5 * (m + m.transpose());
    return SymmetricMatrix(std::move(sym));
}

Matrix solve_linear(const Matrix& m, const Matrix& b) {
    if (m.rows() != m.cols()) throw InputError("solve_linear: matrix must be square");
    if (b.rows() != m.rows()) throw InputError("solve_linear: rhs rows must match matrix order");
    if (!m.allFinite() || !b.allFinite())
        throw NumericalError("solve_linear: non-finite entries");

    Eigen::PartialPivLU<Matrix> lu(m);
    const double norm_inf = m.cwiseAbs().rowwise().sum().maxCoeff();
    const double floor = 1e-13 * std::max(norm_inf, std::numeric_limits<double>::min());
    const Vector pivots = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < pivots.size(); ++i) {
        if (std::abs(pivots(i)) < floor) {
            std::ostringstream os;
            os << "singular to working precision: pivot " << std::abs(pivots(i))
               << " below " << floor;
            throw NumericalError(os.str());
        }
    }
    return lu.solve(b);
}

namespace {

void fix_column_signs(Matrix& vectors) {
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        Eigen::Index imax = 0;
        vectors.col(j).cwiseAbs().maxCoeff(&imax);
        if (vectors(imax, j) < 0.0) vectors.col(j) = -vectors.col(j);
    }
}

}  // namespace

EigenBundle eig_symmetric(const SymmetricMatrix& m) {
    if (!m.mat().allFinite()) throw NumericalError("eig_symmetric: non-finite entries");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_symmetric: decomposition failed to converge");

    const Eigen::Index n = m.order();
    EigenBundle out;
    out.rule = SelectionRule::Full;
    out.values = Vector(n);
    out.vectors = Matrix(n, n);
    // solver returns ascending order; store descending
    for (Eigen::Index j = 0; j < n; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    fix_column_signs(out.vectors);
    return out;
}

EigenBundle top_by_magnitude(const EigenBundle& bundle, Eigen::Index m) {
    if (m < 1) throw InputError("top_by_magnitude: m must be at least 1");
    if (m > bundle.count()) throw InputError("top_by_magnitude: m exceeds available pairs");

    std::vector<Eigen::Index> idx(static_cast<std::size_t>(bundle.count()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(bundle.values(a)) > std::abs(bundle.values(b));
    });
    idx.resize(static_cast<std::size_t>(m));
    std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        return bundle.values(a) > bundle.values(b);
    });

    EigenBundle out;
    out.rule = SelectionRule::ByMagnitude;
    out.values = Vector(m);
    out.vectors = Matrix(bundle.vectors.rows(), m);
    for (Eigen::Index j = 0; j < m; ++j) {
        out.values(j) = bundle.values(idx[static_cast<std::size_t>(j)]);
        out.vectors.col(j) = bundle.vectors.col(idx[static_cast<std::size_t>(j)]);
    }
    return out;
}

double condition_number(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("condition_number: matrix must be square");
    if (m.size() == 0) throw InputError("condition_number: empty matrix");
    Matrix sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    const Vector abs_vals = solver.eigenvalues().cwiseAbs();
    const double hi = abs_vals.maxCoeff();
    const double lo = abs_vals.minCoeff();
    if (hi == 0.0) return std::numeric_limits<double>::infinity();
    if (lo < 1e-13 * hi) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

double spectral_radius(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw InputError("spectral_radius: matrix must be square");
    if (tol <= 0.0) throw InputError("spectral_radius: tol must be positive");
    const Eigen::Index n = m.rows();
    if (n == 0) return 0.0;

    // Deterministic start with a mild index-dependent perturbation so the
    // vector is not orthogonal to the dominant eigenspace.
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = 1.0 + static_cast<double>(i % 7) / 7.0;
    x.normalize();

    // Norm-ratio estimate converges to max|lambda| even when the dominant
    // eigenvalues come in a +/- pair.
    double estimate = 0.0;
    constexpr int kMaxIters = 10000;
    for (int it = 0; it < kMaxIters; ++it) {
        Vector y = m * x;
        const double norm = y.norm();
        if (norm == 0.0) return 0.0;
        const double previous = estimate;
        estimate = norm;  // ||M x|| with ||x|| = 1
        x = y / norm;
        if (it > 0 && std::abs(estimate - previous) <= tol * std::max(estimate, 1e-300))
            return estimate;
    }
    std::ostringstream os;
    os << "spectral_radius: no convergence within " << kMaxIters
       << " iterations; last estimate " << estimate;
    throw NumericalError(os.str());
}

}  // namespace scoreh
