#pragma once

#include <Eigen/Dense>
#include <string>

#include "scoreh/errors.hpp"

namespace scoreh {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. Construction checks the input for symmetry up
/// to a relative round-off budget and stores the symmetrized form (M + Mt)/2.
class SymmetricMatrix {
public:
    static SymmetricMatrix from(Matrix m);

    Eigen::Index order() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }

private:
    explicit SymmetricMatrix(Matrix m) : mat_(std::move(m)) {}
    Matrix mat_;
};

enum class SelectionRule { Full, ByMagnitude };

/// Eigenpairs sorted by descending algebraic eigenvalue; column j of `vectors`
/// pairs with `values[j]`. Vector signs are fixed so the entry of largest
/// absolute value in each column is positive.
struct EigenBundle {
    Vector values;
    Matrix vectors;
    SelectionRule rule = SelectionRule::Full;

    Eigen::Index count() const { return values.size(); }
};

/// Solve M X = B by partially pivoted elimination.
/// Throws NumericalError when a pivot falls below 1e-13 * ||M||_inf.
Matrix solve_linear(const Matrix& m, const Matrix& b);

/// Full symmetric eigendecomposition (all n pairs).
EigenBundle eig_symmetric(const SymmetricMatrix& m);

/// The m pairs of largest |lambda| from `bundle`, re-sorted by descending
/// algebraic value.
EigenBundle top_by_magnitude(const EigenBundle& bundle, Eigen::Index m);

/// max|lambda| / min|lambda| over the spectrum of the symmetric part.
/// Returns +infinity when min|lambda| < 1e-13 * max|lambda|.
double condition_number(const Matrix& m);

/// Power-iteration estimate of max|lambda| within relative tolerance `tol`.
/// Iteration cap 10,000; non-convergence throws NumericalError carrying the
/// last estimate in the message.
double spectral_radius(const Matrix& m, double tol = 1e-6);

}  // namespace scoreh
