#pragma once

#include <string>
#include <vector>

#include "scoreh/graph.hpp"
#include "scoreh/linalg.hpp"

namespace scoreh {

enum class RbfKind { Gaussian, Multiquadric, InverseMultiquadric };

std::string to_string(RbfKind kind);
RbfKind rbf_kind_from_string(const std::string& name);

/// Kernel kind plus shaping parameter. c must be positive; c == 0 is legal for
/// the multiquadric only, where the kernel degenerates to phi(r) = r.
struct RbfChoice {
    RbfKind kind = RbfKind::Gaussian;
    double c = 0.1;

    void validate() const;
};

/// Equally spaced 1-D node positions from 0.001 to 1 inclusive.
std::vector<double> embedding_positions(int n);

/// phi(r): Gaussian exp(-r^2/c^2), MQ sqrt(c^2+r^2), iMQ 1/sqrt(c^2+r^2).
double rbf_value(const RbfChoice& choice, double r);

/// Pairwise |x_i - x_j| over the 1-D embedding; zero diagonal.
SymmetricMatrix distance_matrix(int n);

/// W[i][j] = phi(r_ij) where A[i][j] = 1, else 0; zero diagonal.
SymmetricMatrix masked_rbf_matrix(const AffinityMatrix& a, const RbfChoice& choice);

struct ShapingSelection {
    RbfChoice choice;
    double condition = 0.0;                          // condition number at the argmin
    std::vector<std::pair<double, double>> trace;    // (c, condition) per grid point
};

/// Default shaping grid: 100 equally spaced values on [0.001, 1].
std::vector<double> default_shaping_grid();

/// Pick the grid c minimizing condition_number(masked_rbf_matrix(A, {kind, c})),
/// ties to the smaller c. Throws when every grid point is singular.
ShapingSelection select_shaping_parameter(const AffinityMatrix& a, RbfKind kind,
                                          const std::vector<double>& grid);

}  // namespace scoreh
