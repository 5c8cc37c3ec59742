#include "scoreh/katz.hpp"

#include <sstream>

namespace scoreh {

namespace {

void check_guard(const SymmetricMatrix& w, const KatzConfig& cfg) {
    if (cfg.beta <= 0.0) throw InputError("katz: beta must be positive");
    const double rho = spectral_radius(w.mat());
    if (cfg.beta * rho >= 1.0) {
        std::ostringstream os;
        os << "katz convergence guard violated: beta " << cfg.beta << " * spectral radius "
           << rho << " = " << cfg.beta * rho << " >= 1";
        throw NumericalError(os.str());
    }
}

}  // namespace

SymmetricMatrix katz(const SymmetricMatrix& w, const KatzConfig& cfg) {
    check_guard(w, cfg);
    const Eigen::Index n = w.order();
    const Matrix bw = cfg.beta * w.mat();
    const Matrix system = Matrix::Identity(n, n) - bw;
    Matrix k = solve_linear(system, bw);
    // symmetric in exact arithmetic; purge elimination round-off
    Matrix sym = 0.5 * (k + k.transpose());
    return SymmetricMatrix::from(std::move(sym));
}

SymmetricMatrix katz_series_oracle(const SymmetricMatrix& w, const KatzConfig& cfg,
                                   int terms) {
    check_guard(w, cfg);
    if (terms < 1) throw InputError("katz_series_oracle: terms must be at least 1");
    const Matrix bw = cfg.beta * w.mat();
    Matrix power = bw;
    Matrix sum = bw;
    for (int p = 2; p <= terms; ++p) {
        power = power * bw;
        sum += power;
    }
    Matrix sym = 0.5 * (sum + sum.transpose());
    return SymmetricMatrix::from(std::move(sym));
}

}  // namespace scoreh
