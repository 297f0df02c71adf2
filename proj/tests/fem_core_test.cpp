#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sdarcy/assembly.hpp"
#include "sdarcy/fem_core.hpp"
#include "support.hpp"

using namespace sdarcy;
using sdarcy::testing::factorial;
using sdarcy::testing::random_point;

namespace {

const std::array<Vec2, 3> kRefCorners{Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)};
const std::array<Vec2, 3> kSkewCorners{Vec2(0.2, 0.1), Vec2(1.3, 0.4), Vec2(0.5, 1.2)};

double edge_flux(const std::array<Vec2, 3>& c, const std::array<int, 3>& s, int basis, int edge)
{
    // Edge k joins vertices k+1 and k+2; outward normal for a CCW triangle.
    const Vec2 a = c[(edge + 1) % 3];
    const Vec2 b = c[(edge + 2) % 3];
    const Vec2 t = b - a;
    const Vec2 n = Vec2(t.y(), -t.x()) / t.norm();
    const auto rule = quad_edge(4);
    double flux = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        flux += rule.weights[q] * t.norm() * eval_rt0(c, s, a + rule.points[q] * t).value[basis].dot(n);
    }
    return flux;
}

}  // namespace

TEST(P1, NodalAndPartitionOfUnity)
{
    const auto v1 = eval_p1(Vec2(1, 0));
    EXPECT_DOUBLE_EQ(v1.value[0], 0.0);
    EXPECT_DOUBLE_EQ(v1.value[1], 1.0);
    EXPECT_DOUBLE_EQ(v1.value[2], 0.0);
    const auto v0 = eval_p1(Vec2(0, 0));
    EXPECT_DOUBLE_EQ(v0.value[0], 1.0);

    const auto c = eval_p1(Vec2(1.0 / 3, 1.0 / 3));
    for (double v : c.value) EXPECT_NEAR(v, 1.0 / 3, 1e-15);

    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const auto e = eval_p1(random_point(rng, kRefCorners));
        EXPECT_NEAR(e.value[0] + e.value[1] + e.value[2], 1.0, 1e-15);
        EXPECT_NEAR((e.grad[0] + e.grad[1] + e.grad[2]).norm(), 0.0, 1e-15);
    }
}

TEST(Bubble, ValuesAndGradient)
{
    const Vec2 bary(1.0 / 3, 1.0 / 3);
    EXPECT_NEAR(eval_bubble(bary).value, 1.0, 1e-14);
    EXPECT_NEAR(eval_bubble(bary).grad.norm(), 0.0, 1e-14);
    for (const Vec2& mid : {Vec2(0.5, 0), Vec2(0.5, 0.5), Vec2(0, 0.5)}) {
        EXPECT_NEAR(eval_bubble(mid).value, 0.0, 1e-15);
    }
    // Gradient against central differences.
    std::mt19937 rng(3);
    const double h = 1e-6;
    for (int k = 0; k < 20; ++k) {
        const Vec2 p = random_point(rng, kRefCorners);
        const Vec2 g = eval_bubble(p).grad;
        const double gx = (eval_bubble(p + Vec2(h, 0)).value - eval_bubble(p - Vec2(h, 0)).value) / (2 * h);
        const double gy = (eval_bubble(p + Vec2(0, h)).value - eval_bubble(p - Vec2(0, h)).value) / (2 * h);
        EXPECT_NEAR(g.x(), gx, 1e-8);
        EXPECT_NEAR(g.y(), gy, 1e-8);
    }
}

TEST(AffineMap, RoundTripAndDegenerate)
{
    const AffineMap map(kSkewCorners);
    std::mt19937 rng(11);
    for (int k = 0; k < 10; ++k) {
        const Vec2 r = random_point(rng, kRefCorners);
        EXPECT_NEAR((map.to_reference(map.to_physical(r)) - r).norm(), 0.0, 1e-14);
    }
    EXPECT_NEAR((map.to_physical(Vec2(1, 0)) - kSkewCorners[1]).norm(), 0.0, 1e-15);
    EXPECT_THROW(AffineMap({Vec2(0, 0), Vec2(1, 1), Vec2(2, 2)}), std::invalid_argument);
    EXPECT_THROW(AffineMap({Vec2(0, 0), Vec2(0, 1), Vec2(1, 0)}), std::invalid_argument);
}

TEST(Rt0, DivergenceTheoremOnUnitTriangle)
{
    const std::array<int, 3> plus{1, 1, 1};
    const double area = 0.5;
    for (int i = 0; i < 3; ++i) {
        const auto e = eval_rt0(kRefCorners, plus, Vec2(0.2, 0.3));
        const double len = (kRefCorners[(i + 1) % 3] - kRefCorners[(i + 2) % 3]).norm();
        // Coefficients are mean normal velocities, so the flux of psi_i is |e_i|;
        // the flux-normalized function psi_i / |e_i| integrates its divergence to 1.
        EXPECT_NEAR(e.div[i] * area / len, 1.0, 1e-14);
        double total = 0.0;
        for (int k = 0; k < 3; ++k) total += edge_flux(kRefCorners, plus, i, k);
        EXPECT_NEAR(total / len, 1.0, 1e-13);
    }
}

TEST(Rt0, EdgeFluxesAreKroneckerTimesSign)
{
    const std::array<int, 3> signs{1, -1, 1};
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            const double len = (kSkewCorners[(k + 1) % 3] - kSkewCorners[(k + 2) % 3]).norm();
            const double expected = i == k ? signs[i] * len : 0.0;
            EXPECT_NEAR(edge_flux(kSkewCorners, signs, i, k), expected, 1e-12);
        }
    }
}

TEST(Rt0, SignFlipNegates)
{
    std::mt19937 rng(5);
    for (int k = 0; k < 5; ++k) {
        const Vec2 p = random_point(rng, kSkewCorners);
        const auto a = eval_rt0(kSkewCorners, {1, 1, 1}, p);
        const auto b = eval_rt0(kSkewCorners, {-1, 1, 1}, p);
        EXPECT_NEAR((a.value[0] + b.value[0]).norm(), 0.0, 1e-15);
        EXPECT_NEAR((a.value[1] - b.value[1]).norm(), 0.0, 1e-15);
        EXPECT_NEAR(a.div[0] + b.div[0], 0.0, 1e-14);
    }
}

TEST(Rt0, ReproducesConstants)
{
    const std::array<int, 3> signs{1, -1, -1};
    const Vec2 v(1.0, 0.0);
    // Degrees of freedom of v: mean normal component along s_k * outward normal.
    std::array<double, 3> coef{};
    for (int k = 0; k < 3; ++k) {
        const Vec2 t = kSkewCorners[(k + 2) % 3] - kSkewCorners[(k + 1) % 3];
        coef[k] = signs[k] * v.dot(Vec2(t.y(), -t.x()) / t.norm());
    }
    std::mt19937 rng(9);
    for (int k = 0; k < 5; ++k) {
        const auto e = eval_rt0(kSkewCorners, signs, random_point(rng, kSkewCorners));
        const Vec2 u = coef[0] * e.value[0] + coef[1] * e.value[1] + coef[2] * e.value[2];
        EXPECT_NEAR((u - v).norm(), 0.0, 1e-12);
    }
}

TEST(Rt0, DegenerateTriangleThrows)
{
    EXPECT_THROW(eval_rt0({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)}, {1, 1, 1}, Vec2(0.5, 0)), std::invalid_argument);
}

TEST(Quadrature, TriangleMonomialExactness)
{
    for (int d = 1; d <= 10; ++d) {
        const auto rule = quad_triangle(d);
        EXPECT_EQ(rule.degree, d);
        double wsum = 0.0;
        for (double w : rule.weights) {
            EXPECT_GT(w, 0.0);
            wsum += w;
        }
        EXPECT_NEAR(wsum, 0.5, 1e-15);
        for (const auto& p : rule.points) {
            EXPECT_GE(p.x(), 0.0);
            EXPECT_GE(p.y(), 0.0);
            EXPECT_LE(p.x() + p.y(), 1.0);
        }
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; a + b <= d; ++b) {
                double q = 0.0;
                for (std::size_t k = 0; k < rule.points.size(); ++k) {
                    q += rule.weights[k] * std::pow(rule.points[k].x(), a) * std::pow(rule.points[k].y(), b);
                }
                const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                EXPECT_NEAR(q, exact, 1e-13) << "degree " << d << " monomial x^" << a << " y^" << b;
            }
        }
    }
    EXPECT_EQ(quad_triangle(1).points.size(), 1u);
    EXPECT_DOUBLE_EQ(quad_triangle(1).weights[0], 0.5);
    EXPECT_NEAR((quad_triangle(1).points[0] - Vec2(1.0 / 3, 1.0 / 3)).norm(), 0.0, 1e-16);
}

TEST(Quadrature, EdgeExactness)
{
    for (int d = 1; d <= 10; ++d) {
        const auto rule = quad_edge(d);
        double wsum = 0.0;
        for (double w : rule.weights) {
            EXPECT_GT(w, 0.0);
            wsum += w;
        }
        EXPECT_NEAR(wsum, 1.0, 1e-15);
        for (int k = 0; k <= d; ++k) {
            double q = 0.0;
            for (std::size_t i = 0; i < rule.points.size(); ++i) q += rule.weights[i] * std::pow(rule.points[i], k);
            EXPECT_NEAR(q, 1.0 / (k + 1), 1e-14);
        }
    }
    const auto r5 = quad_edge(5);
    double q = 0.0;
    for (std::size_t i = 0; i < r5.points.size(); ++i) q += r5.weights[i] * std::pow(r5.points[i], 5);
    EXPECT_NEAR(q, 1.0 / 6, 1e-14);
}

TEST(Quadrature, UnsupportedDegree)
{
    EXPECT_THROW(quad_triangle(0), std::invalid_argument);
    EXPECT_THROW(quad_triangle(11), std::invalid_argument);
    EXPECT_THROW(quad_edge(0), std::invalid_argument);
    EXPECT_THROW(quad_edge(11), std::invalid_argument);
}

TEST(Mini, ReproducesAffineFields)
{
    const AffineMap map(kSkewCorners);
    const auto affine = [](const Vec2& x) { return Vec2(1.0 + 2 * x.x() - x.y(), -0.5 + 0.3 * x.x() + 4 * x.y()); };
    std::mt19937 rng(13);
    for (int k = 0; k < 10; ++k) {
        const Vec2 ref = random_point(rng, kRefCorners);
        const auto s = mini_shape(map, ref);
        Vec2 u = Vec2::Zero();
        Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
        for (int a = 0; a < 3; ++a) {
            u += s.value[a] * affine(kSkewCorners[a]);
            g += affine(kSkewCorners[a]) * s.grad[a].transpose();
        }
        EXPECT_NEAR((u - affine(map.to_physical(ref))).norm(), 0.0, 1e-14);
        Eigen::Matrix2d expected;
        expected << 2, -1, 0.3, 4;
        EXPECT_NEAR((g - expected).norm(), 0.0, 1e-13);
    }
}
