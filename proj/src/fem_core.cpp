#include "sdarcy/fem_core.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <string>

namespace sdarcy {

P1Eval eval_p1(const Vec2& ref_point)
{
    P1Eval e;
    e.value = {1.0 - ref_point.x() - ref_point.y(), ref_point.x(), ref_point.y()};
    e.grad = {Vec2(-1.0, -1.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
    return e;
}

BubbleEval eval_bubble(const Vec2& ref_point)
{
    const auto p1 = eval_p1(ref_point);
    const auto& l = p1.value;
    BubbleEval b;
    b.value = 27.0 * l[0] * l[1] * l[2];
    b.grad = 27.0 * (l[1] * l[2] * p1.grad[0] + l[0] * l[2] * p1.grad[1] + l[0] * l[1] * p1.grad[2]);
    return b;
}

AffineMap::AffineMap(const std::array<Vec2, 3>& corners) : origin_(corners[0])
{
    jacobian_.col(0) = corners[1] - corners[0];
    jacobian_.col(1) = corners[2] - corners[0];
    det_ = jacobian_.determinant();
    if (!(det_ > 0.0)) {
        throw std::invalid_argument("degenerate or clockwise triangle (det J = " + std::to_string(det_) + ")");
    }
    inverse_ = jacobian_.inverse();
}

Rt0Eval eval_rt0(const std::array<Vec2, 3>& corners, const std::array<int, 3>& edge_signs, const Vec2& point)
{
    const double area =
        0.5 * ((corners[1] - corners[0]).x() * (corners[2] - corners[0]).y() -
               (corners[2] - corners[0]).x() * (corners[1] - corners[0]).y());
    if (!(area > 0.0)) {
        throw std::invalid_argument("RT0 basis on a degenerate triangle");
    }
    Rt0Eval r;
    for (int k = 0; k < 3; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const double len = (corners[(ku + 2) % 3] - corners[(ku + 1) % 3]).norm();
        const double scale = edge_signs[ku] * len / (2.0 * area);
        r.value[ku] = scale * (point - corners[ku]);
        r.div[ku] = 2.0 * scale;
    }
    return r;
}

EdgeQuadrature gauss_legendre(int n)
{
    if (n < 1) {
        throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
    }
    EdgeQuadrature q;
    q.degree = 2 * n - 1;
    q.points.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n starting from the Chebyshev-like guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            const double pn = n == 1 ? x : p1;
            const double pnm1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        const double pn = n == 1 ? x : p1;
        const double pnm1 = n == 1 ? 1.0 : p0;
        dp = n * (x * pn - pnm1) / (x * x - 1.0);
        const auto iu = static_cast<std::size_t>(n - 1 - i);
        q.points[iu] = 0.5 * (1.0 + x);
        q.weights[iu] = 1.0 / ((1.0 - x * x) * dp * dp);  // (2/((1-x^2)P'^2)) / 2 for [0,1]
    }
    return q;
}

EdgeQuadrature quad_edge(int degree)
{
    if (degree < 1 || degree > 10) {
        throw std::invalid_argument("unsupported edge quadrature degree " + std::to_string(degree));
    }
    auto q = gauss_legendre((degree + 2) / 2);
    q.degree = degree;
    return q;
}

TriangleQuadrature quad_triangle(int degree)
{
    if (degree < 1 || degree > 10) {
        throw std::invalid_argument("unsupported triangle quadrature degree " + std::to_string(degree));
    }
    TriangleQuadrature q;
    q.degree = degree;
    if (degree == 1) {
        q.points = {Vec2(1.0 / 3.0, 1.0 / 3.0)};
        q.weights = {0.5};
        return q;
    }
    if (degree == 2) {
        q.points = {Vec2(1.0 / 6.0, 1.0 / 6.0), Vec2(2.0 / 3.0, 1.0 / 6.0), Vec2(1.0 / 6.0, 2.0 / 3.0)};
        q.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
        return q;
    }
    // Duffy collapse (u, v) -> (u, (1 - u) v) with Jacobian (1 - u); the extra
    // linear factor raises the required exactness in u by one.
    const auto gu = gauss_legendre((degree + 3) / 2);
    const auto gv = gauss_legendre((degree + 2) / 2);
    for (std::size_t i = 0; i < gu.points.size(); ++i) {
        for (std::size_t j = 0; j < gv.points.size(); ++j) {
            const double u = gu.points[i];
            const double v = gv.points[j];
            q.points.emplace_back(u, (1.0 - u) * v);
            q.weights.push_back(gu.weights[i] * gv.weights[j] * (1.0 - u));
        }
    }
    return q;
}

}  // namespace sdarcy
