#include <doctest.h>

#include <cmath>
#include <limits>

#include "scoreh/linalg.hpp"
#include "scoreh/rng.hpp"

using namespace scoreh;

namespace {

Matrix random_symmetric(int n, Rng& rng, double scale = 1.0) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = (2.0 * rng.next_double() - 1.0) * scale;
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

// determinant via plain elimination, independent of the eig path
double det_by_elimination(Matrix m) {
    const Eigen::Index n = m.rows();
    double det = 1.0;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        for (Eigen::Index r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (m(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            m.row(r) -= f * m.row(col);
        }
    }
    return det;
}

}  // namespace

TEST_CASE("solve_linear identity and diagonal") {
    Matrix b(2, 1);
    b << 2, 4;
    CHECK(solve_linear(Matrix::Identity(2, 2), b).isApprox(b));

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 4;
    Matrix x = solve_linear(d, b);
    CHECK(x(0, 0) == doctest::Approx(1.0));
    CHECK(x(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("solve_linear residual bound on random systems") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_symmetric(10, rng) + 12.0 * Matrix::Identity(10, 10);
        Matrix b(10, 3);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 3; ++j) b(i, j) = 2.0 * rng.next_double() - 1.0;
        Matrix x = solve_linear(m, b);
        CHECK((m * x - b).norm() <= 1e-9 * b.norm());
    }
}

TEST_CASE("solve_linear rejects a singular matrix") {
    Matrix m(2, 2);
    m << 1, 2, 2, 4;
    Matrix b = Matrix::Ones(2, 1);
    CHECK_THROWS_AS(solve_linear(m, b), NumericalError);
}

TEST_CASE("eig_symmetric on small fixed matrices") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 3;
    d(1, 1) = 1;
    d(2, 2) = 2;
    EigenBundle e = eig_symmetric(SymmetricMatrix::from(d));
    CHECK(e.values(0) == doctest::Approx(3.0));
    CHECK(e.values(1) == doctest::Approx(2.0));
    CHECK(e.values(2) == doctest::Approx(1.0));

    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    EigenBundle e2 = eig_symmetric(SymmetricMatrix::from(s));
    CHECK(e2.values(0) == doctest::Approx(1.0));
    CHECK(e2.values(1) == doctest::Approx(-1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(e2.vectors(0, 0)) == doctest::Approx(inv_sqrt2));
    CHECK(std::abs(e2.vectors(1, 0)) == doctest::Approx(inv_sqrt2));
}

TEST_CASE("eig_symmetric invariants on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_index(11));  // up to 12
        Matrix m = random_symmetric(n, rng);
        SymmetricMatrix sym = SymmetricMatrix::from(m);
        EigenBundle e = eig_symmetric(sym);

        CHECK(std::abs(e.values.sum() - m.trace()) <= 1e-8);

        double prod = 1.0;
        for (Eigen::Index i = 0; i < e.values.size(); ++i) prod *= e.values(i);
        const double det = det_by_elimination(m);
        CHECK(prod == doctest::Approx(det).epsilon(1e-6));

        // reconstruction and residuals
        Matrix recon = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
        CHECK((recon - sym.mat()).norm() <= 1e-7 * std::max(1e-12, sym.mat().norm()));
        for (Eigen::Index j = 0; j < e.count(); ++j) {
            const double resid =
                (sym.mat() * e.vectors.col(j) - e.values(j) * e.vectors.col(j)).norm();
            CHECK(resid <= 1e-8 * std::max(1e-12, sym.mat().norm()));
        }
        // orthonormal columns
        Matrix gram = e.vectors.transpose() * e.vectors;
        CHECK((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("top_by_magnitude matches exhaustive sort") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_symmetric(8, rng);
        EigenBundle full = eig_symmetric(SymmetricMatrix::from(m));
        EigenBundle top = top_by_magnitude(full, 3);

        std::vector<double> mags;
        for (Eigen::Index i = 0; i < full.values.size(); ++i)
            mags.push_back(std::abs(full.values(i)));
        std::sort(mags.begin(), mags.end(), std::greater<>());
        std::vector<double> got;
        for (Eigen::Index i = 0; i < top.values.size(); ++i)
            got.push_back(std::abs(top.values(i)));
        std::sort(got.begin(), got.end(), std::greater<>());
        for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(mags[i]));

        // algebraic descending order
        for (Eigen::Index i = 1; i < top.values.size(); ++i)
            CHECK(top.values(i - 1) >= top.values(i));
    }
    EigenBundle one;
    one.values = Vector(2);
    one.values << 5, -1;
    one.vectors = Matrix::Identity(2, 2);
    EigenBundle t = top_by_magnitude(one, 1);
    CHECK(t.values(0) == doctest::Approx(5.0));
    CHECK_THROWS_AS(top_by_magnitude(one, 0), InputError);
    CHECK_THROWS_AS(top_by_magnitude(one, 3), InputError);
}

TEST_CASE("solving against eig-reconstructed columns recovers coordinate vectors") {
    Rng rng(83);
    Matrix m = random_symmetric(7, rng) + 9.0 * Matrix::Identity(7, 7);
    EigenBundle e = eig_symmetric(SymmetricMatrix::from(m));
    Matrix recon = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
    for (int j = 0; j < 7; ++j) {
        Matrix x = solve_linear(m, recon.col(j));
        CHECK((x - Matrix::Identity(7, 7).col(j)).norm() <= 1e-9);
    }
}

TEST_CASE("condition_number basics") {
    CHECK(condition_number(Matrix::Identity(4, 4)) == doctest::Approx(1.0));

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 4;
    d(1, 1) = -2;
    CHECK(condition_number(d) == doctest::Approx(2.0));

    Matrix singular(2, 2);
    singular << 1, 1, 1, 1;
    CHECK(std::isinf(condition_number(singular)));
}

TEST_CASE("condition_number matches eig ratio oracle on random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_symmetric(9, rng) + 3.0 * Matrix::Identity(9, 9);
        EigenBundle e = eig_symmetric(SymmetricMatrix::from(m));
        const double hi = e.values.cwiseAbs().maxCoeff();
        const double lo = e.values.cwiseAbs().minCoeff();
        CHECK(condition_number(m) == doctest::Approx(hi / lo).epsilon(1e-9));
    }
}

TEST_CASE("spectral_radius") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 3;
    CHECK(spectral_radius(d) == doctest::Approx(3.0).epsilon(1e-5));

    CHECK(spectral_radius(Matrix::Zero(3, 3)) == doctest::Approx(0.0));

    // agrees with the full decomposition even when +/- pair dominates
    Matrix pm(2, 2);
    pm << 0, 2, 2, 0;  // eigenvalues +2, -2
    CHECK(spectral_radius(pm, 1e-8) == doctest::Approx(2.0).epsilon(1e-6));

    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix m = random_symmetric(12, rng);
        EigenBundle e = eig_symmetric(SymmetricMatrix::from(m));
        const double expect = e.values.cwiseAbs().maxCoeff();
        CHECK(spectral_radius(m, 1e-9) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("SymmetricMatrix rejects asymmetric input") {
    Matrix m(2, 2);
    m << 1, 2, 2.5, 1;
    CHECK_THROWS_AS(SymmetricMatrix::from(m), NumericalError);
}
