#include "scoreh/rbf.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace scoreh {

std::string to_string(RbfKind kind) {
    switch (kind) {
        case RbfKind::Gaussian: return "gaussian";
        case RbfKind::Multiquadric: return "mq";
        case RbfKind::InverseMultiquadric: return "imq";
    }
    return "?";
}

RbfKind rbf_kind_from_string(const std::string& name) {
    if (name == "gaussian") return RbfKind::Gaussian;
    if (name == "mq" || name == "multiquadric") return RbfKind::Multiquadric;
    if (name == "imq" || name == "inverse-multiquadric") return RbfKind::InverseMultiquadric;
    throw InputError("unknown RBF kind \"" + name + "\" (expected gaussian|mq|imq)");
}

void RbfChoice::validate() const {
    if (c < 0.0) throw InputError("shaping parameter c must be non-negative");
    if (c == 0.0 && kind != RbfKind::Multiquadric)
        throw InputError("c = 0 is only valid for the multiquadric kernel");
}

std::vector<double> embedding_positions(int n) {
    if (n < 2) throw InputError("embedding requires at least 2 nodes");
    std::vector<double> x(static_cast<std::size_t>(n));
    const double lo = 0.001, hi = 1.0;
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = lo + step * i;
    x.back() = hi;
    return x;
}

double rbf_value(const RbfChoice& choice, double r) {
    if (r < 0.0) throw InputError("rbf_value: distance must be non-negative");
    switch (choice.kind) {
        case RbfKind::Gaussian:
            return std::exp(-(r * r) / (choice.c * choice.c));
        case RbfKind::Multiquadric:
            return std::sqrt(choice.c * choice.c + r * r);
        case RbfKind::InverseMultiquadric: {
            const double s = choice.c * choice.c + r * r;
            if (s == 0.0)
                throw InputError("inverse multiquadric undefined at r = 0 with c = 0");
            return 1.0 / std::sqrt(s);
        }
    }
    throw InputError("rbf_value: unknown kernel");
}

SymmetricMatrix distance_matrix(int n) {
    const auto x = embedding_positions(n);
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) = std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
    return SymmetricMatrix::from(std::move(r));
}

SymmetricMatrix masked_rbf_matrix(const AffinityMatrix& a, const RbfChoice& choice) {
    choice.validate();
    const Eigen::Index n = a.order();
    if (n < 2) throw InputError("masked_rbf_matrix: need at least 2 nodes");
    const auto x = embedding_positions(static_cast<int>(n));
    Matrix w = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a.a(i, j) == 0.0) continue;
            const double r = std::abs(x[static_cast<std::size_t>(i)] -
                                      x[static_cast<std::size_t>(j)]);
            const double v = rbf_value(choice, r);
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return SymmetricMatrix::from(std::move(w));
}

std::vector<double> default_shaping_grid() {
    std::vector<double> grid(100);
    const double lo = 0.001, hi = 1.0;
    for (int i = 0; i < 100; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / 99.0;
    grid.back() = hi;
    return grid;
}

ShapingSelection select_shaping_parameter(const AffinityMatrix& a, RbfKind kind,
                                          const std::vector<double>& grid) {
    if (grid.empty()) throw InputError("select_shaping_parameter: empty grid");
    ShapingSelection out;
    out.trace.reserve(grid.size());
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    for (const double c : grid) {
        const RbfChoice choice{kind, c};
        double cond = std::numeric_limits<double>::infinity();
        try {
            cond = condition_number(masked_rbf_matrix(a, choice).mat());
        } catch (const NumericalError&) {
            // singular grid point; recorded as +inf
        }
        out.trace.emplace_back(c, cond);
        const bool better =
            std::isfinite(cond) &&
            (!found || cond < best || (cond == best && c < out.choice.c));
        if (better) {
            best = cond;
            out.choice = choice;
            out.condition = cond;
            found = true;
        }
    }
    if (!found)
        throw NumericalError("select_shaping_parameter: every grid point is singular");
    return out;
}

}  // namespace scoreh
