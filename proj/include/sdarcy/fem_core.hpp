#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "sdarcy/mesh.hpp"

namespace sdarcy {

/// Reference triangle is (0,0), (1,0), (0,1); barycentrics are
/// l0 = 1 - xi - eta, l1 = xi, l2 = eta.
struct P1Eval {
    std::array<double, 3> value{};
    std::array<Vec2, 3> grad;  // reference gradients, constant
};

struct BubbleEval {
    double value{};
    Vec2 grad;  // reference gradient
};

P1Eval eval_p1(const Vec2& ref_point);

/// b = 27 l0 l1 l2, equal to 1 at the barycenter and 0 on the boundary.
BubbleEval eval_bubble(const Vec2& ref_point);

/// Affine map x = a + J * ref from the reference triangle onto a physical triangle.
class AffineMap {
public:
    explicit AffineMap(const std::array<Vec2, 3>& corners);

    [[nodiscard]] Vec2 to_physical(const Vec2& ref) const { return origin_ + jacobian_ * ref; }
    [[nodiscard]] Vec2 to_reference(const Vec2& x) const { return inverse_ * (x - origin_); }
    /// Maps a reference-space gradient to physical space (J^{-T} g).
    [[nodiscard]] Vec2 push_gradient(const Vec2& ref_grad) const { return inverse_.transpose() * ref_grad; }
    [[nodiscard]] double det() const { return det_; }
    [[nodiscard]] double area() const { return 0.5 * det_; }

private:
    Vec2 origin_;
    Eigen::Matrix2d jacobian_;
    Eigen::Matrix2d inverse_;
    double det_{};
};

/// Lowest-order Raviart-Thomas basis on a physical triangle.
///
/// Basis function k is attached to the edge opposite vertex k:
///   psi_k(x) = s_k |e_k| / (2|K|) (x - p_k)
/// so its normal component along the outward normal of e_k equals s_k on
/// that edge and vanishes on the two other edges. A coefficient is therefore
/// the mean normal velocity across the edge measured along the global edge
/// normal.
struct Rt0Eval {
    std::array<Vec2, 3> value;
    std::array<double, 3> div{};
};

Rt0Eval eval_rt0(const std::array<Vec2, 3>& corners, const std::array<int, 3>& edge_signs, const Vec2& point);

struct TriangleQuadrature {
    int degree{};
    std::vector<Vec2> points;       // reference coordinates (xi, eta)
    std::vector<double> weights;    // sum to 1/2
};

struct EdgeQuadrature {
    int degree{};
    std::vector<double> points;     // parameter in [0, 1]
    std::vector<double> weights;    // sum to 1
};

/// Rules exact for polynomials up to `degree` in [1, 10]; throws std::invalid_argument otherwise.
/// Degrees 1 and 2 use the centroid and the three-point interior rule;
/// higher degrees use a collapsed Gauss-Legendre product rule.
TriangleQuadrature quad_triangle(int degree);
EdgeQuadrature quad_edge(int degree);

/// n-point Gauss-Legendre rule on [0, 1].
EdgeQuadrature gauss_legendre(int n);

}  // namespace sdarcy
