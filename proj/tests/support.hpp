#pragma once

// Independent oracles shared by the test suites.

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sdarcy/mesh.hpp"
#include "sdarcy/sparse.hpp"

namespace sdarcy::testing {

/// Textbook Gaussian elimination with partial pivoting on a dense copy.
inline Eigen::VectorXd gauss_solve(Eigen::MatrixXd a, Eigen::VectorXd b)
{
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        }
        if (a(piv, k) == 0.0) throw std::runtime_error("singular matrix in dense oracle");
        a.row(k).swap(a.row(piv));
        std::swap(b[k], b[piv]);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            a.row(i).tail(n - k) -= f * a.row(k).tail(n - k);
            b[i] -= f * b[k];
        }
    }
    Eigen::VectorXd x(n);
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        double s = b[k];
        for (Eigen::Index j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
        x[k] = s / a(k, k);
    }
    return x;
}

/// Dense solve where each constrained row is replaced by an identity row
/// carrying the prescribed value. This does not share code with the
/// symmetric elimination used by the library.
inline Eigen::VectorXd constrained_dense_solve(const SparseMatrix& a, const Eigen::VectorXd& rhs,
                                               const std::vector<Index>& dofs, const std::vector<double>& values)
{
    Eigen::MatrixXd d = Eigen::MatrixXd(a);
    Eigen::VectorXd b = rhs;
    for (std::size_t k = 0; k < dofs.size(); ++k) {
        d.row(dofs[k]).setZero();
        d(dofs[k], dofs[k]) = 1.0;
        b[dofs[k]] = values[k];
    }
    return gauss_solve(d, b);
}

inline double max_abs(const SparseMatrix& m)
{
    double r = 0.0;
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
    }
    return r;
}

/// Uniform point in a triangle.
inline Vec2 random_point(std::mt19937& rng, const std::array<Vec2, 3>& c)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng);
    double b = u(rng);
    if (a + b > 1.0) {
        a = 1.0 - a;
        b = 1.0 - b;
    }
    return c[0] + a * (c[1] - c[0]) + b * (c[2] - c[0]);
}

inline double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace sdarcy::testing
