#pragma once

#include <functional>

#include <Eigen/Core>

#include "sdarcy/mesh.hpp"
#include "sdarcy/params.hpp"
#include "sdarcy/spaces.hpp"

namespace sdarcy {

using Mat2 = Eigen::Matrix2d;

/// Exact fields of a coupled problem together with everything the solvers
/// need from them: forcings, time derivatives, and first derivatives.
/// Velocity gradients use grad(i, j) = d u_i / d x_j.
struct ManufacturedCase {
    std::function<Vec2(const Vec2&, double)> u_f;
    std::function<double(const Vec2&, double)> p_f;
    std::function<Vec2(const Vec2&, double)> u_p;
    std::function<double(const Vec2&, double)> phi_p;

    std::function<Mat2(const Vec2&, double)> grad_u_f;
    std::function<Vec2(const Vec2&, double)> grad_phi_p;
    std::function<double(const Vec2&, double)> div_u_p;

    std::function<Vec2(const Vec2&, double)> dt_u_f;
    std::function<double(const Vec2&, double)> dt_phi_p;

    std::function<Vec2(const Vec2&, double)> f_f;
    std::function<double(const Vec2&, double)> f_p;

    /// Boundary data taken from the exact fields.
    [[nodiscard]] BoundaryData boundary_data() const;
};

/// Smooth test problem on (0,1)x(0,1) (fluid) over (0,1)x(1,2) (porous):
///
///   u_f = [(x^2 (y-1)^2 + y) cos t, (-2/3 x (y-1)^3 + 2 - pi sin(pi x)) cos t]
///   p_f = (2 - pi sin(pi x)) sin(pi y / 2) cos t
///   phi_p = (2 - pi sin(pi x)) (1 - y - cos(pi y)) cos t
///   u_p = -K grad(phi_p)
///
/// Forcings are closed forms for arbitrary nu, K, S0:
///   f_f = d_t u_f - nu lap(u_f) + grad(p_f)       (u_f is divergence free)
///   f_p = S0 d_t phi_p + div(u_p)
ManufacturedCase example51_case(const ModelParams& params);

/// Everything zero; used for homogeneous runs.
ManufacturedCase zero_case();

}  // namespace sdarcy
