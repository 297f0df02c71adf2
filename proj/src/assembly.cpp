#include "sdarcy/assembly.hpp"

#include <algorithm>

#include "sdarcy/fem_core.hpp"

namespace sdarcy {

namespace {

std::size_t idx(Index i) { return static_cast<std::size_t>(i); }

AffineMap triangle_map(const TriMesh& mesh, Index t) { return AffineMap(mesh.corners(t)); }

std::array<int, 3> rt0_signs(const TriMesh& mesh, Index t)
{
    return {mesh.edge_sign(t, 0), mesh.edge_sign(t, 1), mesh.edge_sign(t, 2)};
}

std::array<Index, 3> rt0_dofs(const TriMesh& mesh, const DarcyVelocitySpace& vel, Index t)
{
    const auto& te = mesh.triangle_edges[idx(t)];
    return {vel.edge_dof[idx(te[0])], vel.edge_dof[idx(te[1])], vel.edge_dof[idx(te[2])]};
}

SparseMatrix from_triplets(Index rows, Index cols, const Triplets& triplets)
{
    SparseMatrix m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

// Quadrature point on an interface edge with everything needed on both sides.
struct InterfacePoint {
    Vec2 x;
    double weight{};     // includes edge length
    MiniShape fluid;     // fluid triangle shapes at x
    Rt0Eval porous;      // porous triangle RT0 basis at x
};

template <class Fn>
void for_each_interface_point(const TriMesh& mesh, const QuadratureOptions& quad, Fn&& fn)
{
    const auto rule = quad_edge(quad.edge_degree);
    for (const auto& ie : mesh.interface_edges) {
        const auto& ed = mesh.edges[idx(ie.edge)];
        const Vec2 a = mesh.vertices[idx(ed.v[0])];
        const Vec2 b = mesh.vertices[idx(ed.v[1])];
        const double len = (b - a).norm();
        const AffineMap fmap = triangle_map(mesh, ie.fluid_tri);
        const auto pcorners = mesh.corners(ie.porous_tri);
        const auto psigns = rt0_signs(mesh, ie.porous_tri);
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            InterfacePoint p;
            p.x = a + rule.points[q] * (b - a);
            p.weight = rule.weights[q] * len;
            p.fluid = mini_shape(fmap, fmap.to_reference(p.x));
            p.porous = eval_rt0(pcorners, psigns, p.x);
            fn(ie, p);
        }
    }
}

}  // namespace

MiniShape mini_shape(const AffineMap& map, const Vec2& ref_point)
{
    const auto p1 = eval_p1(ref_point);
    const auto bub = eval_bubble(ref_point);
    MiniShape s;
    for (std::size_t a = 0; a < 3; ++a) {
        s.value[a] = p1.value[a];
        s.grad[a] = map.push_gradient(p1.grad[a]);
    }
    s.value[3] = bub.value;
    s.grad[3] = map.push_gradient(bub.grad);
    return s;
}

SparseMatrix assemble_stokes_mass(const TriMesh& mesh, const StokesVelocitySpace& vel, const QuadratureOptions& quad)
{
    const auto rule = quad_triangle(quad.volume_degree);
    Triplets trip;
    for (Index t : vel.triangles) {
        const AffineMap map = triangle_map(mesh, t);
        Eigen::Matrix4d local = Eigen::Matrix4d::Zero();
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto s = mini_shape(map, rule.points[q]);
            const double w = rule.weights[q] * map.det();
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) local(a, b) += w * s.value[idx(a)] * s.value[idx(b)];
        }
        const auto dofs = vel.element_dofs(mesh, t);
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    trip.emplace_back(static_cast<int>(dofs[idx(4 * c + a)]), static_cast<int>(dofs[idx(4 * c + b)]), local(a, b));
    }
    return from_triplets(vel.dim(), vel.dim(), trip);
}

SparseMatrix assemble_a_f(const TriMesh& mesh, const StokesVelocitySpace& vel, const ModelParams& params,
                          const QuadratureOptions& quad)
{
    const auto rule = quad_triangle(std::max(4, quad.volume_degree));
    const double nu = params.nu;
    Triplets trip;
    for (Index t : vel.triangles) {
        const AffineMap map = triangle_map(mesh, t);
        Eigen::Matrix<double, 8, 8> local = Eigen::Matrix<double, 8, 8>::Zero();
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto s = mini_shape(map, rule.points[q]);
            const double w = rule.weights[q] * map.det();
            // 2 nu D(e_d N_b) : D(e_c N_a) = nu (delta_cd grad N_a . grad N_b + d_d N_a d_c N_b)
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a < 4; ++a)
                    for (int d = 0; d < 2; ++d)
                        for (int b = 0; b < 4; ++b) {
                            const Vec2& ga = s.grad[idx(a)];
                            const Vec2& gb = s.grad[idx(b)];
                            const double v = (c == d ? ga.dot(gb) : 0.0) + ga[d] * gb[c];
                            local(4 * c + a, 4 * d + b) += w * nu * v;
                        }
        }
        const auto dofs = vel.element_dofs(mesh, t);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                trip.emplace_back(static_cast<int>(dofs[idx(i)]), static_cast<int>(dofs[idx(j)]), local(i, j));
    }

    const double bjs = params.bjs_coeff();
    for_each_interface_point(mesh, quad, [&](const InterfaceEdge& ie, const InterfacePoint& p) {
        const Vec2 tau(ie.normal.y(), -ie.normal.x());
        const auto dofs = vel.element_dofs(mesh, ie.fluid_tri);
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a)
                for (int d = 0; d < 2; ++d)
                    for (int b = 0; b < 4; ++b) {
                        const double v = p.fluid.value[idx(a)] * tau[c] * p.fluid.value[idx(b)] * tau[d];
                        if (v != 0.0) {
                            trip.emplace_back(static_cast<int>(dofs[idx(4 * c + a)]), static_cast<int>(dofs[idx(4 * d + b)]),
                                              p.weight * bjs * v);
                        }
                    }
    });
    return from_triplets(vel.dim(), vel.dim(), trip);
}

SparseMatrix assemble_b_f(const TriMesh& mesh, const StokesVelocitySpace& vel, const StokesPressureSpace& pres,
                          const QuadratureOptions& quad)
{
    const auto rule = quad_triangle(std::max(2, quad.volume_degree));
    Triplets trip;
    for (Index t : vel.triangles) {
        const AffineMap map = triangle_map(mesh, t);
        Eigen::Matrix<double, 3, 8> local = Eigen::Matrix<double, 3, 8>::Zero();
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto s = mini_shape(map, rule.points[q]);
            const double w = rule.weights[q] * map.det();
            for (int k = 0; k < 3; ++k)
                for (int d = 0; d < 2; ++d)
                    for (int b = 0; b < 4; ++b) local(k, 4 * d + b) += w * s.value[idx(k)] * s.grad[idx(b)][d];
        }
        const auto vdofs = vel.element_dofs(mesh, t);
        const auto& tv = mesh.triangles[idx(t)];
        for (int k = 0; k < 3; ++k) {
            const Index row = pres.vertex_dof[idx(tv[idx(k)])];
            for (int j = 0; j < 8; ++j) trip.emplace_back(static_cast<int>(row), static_cast<int>(vdofs[idx(j)]), local(k, j));
        }
    }
    return from_triplets(pres.dim(), vel.dim(), trip);
}

SparseMatrix assemble_a_p(const TriMesh& mesh, const DarcyVelocitySpace& vel, const ModelParams& params,
                          const QuadratureOptions& quad)
{
    const auto rule = quad_triangle(std::max(2, quad.volume_degree));
    const Mat2 kinv = params.k_inverse();
    Triplets trip;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_region[idx(t)] != Region::Porous) continue;
        const AffineMap map = triangle_map(mesh, t);
        const auto corners = mesh.corners(t);
        const auto signs = rt0_signs(mesh, t);
        Eigen::Matrix3d local = Eigen::Matrix3d::Zero();
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto r = eval_rt0(corners, signs, map.to_physical(rule.points[q]));
            const double w = rule.weights[q] * map.det();
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) local(i, j) += w * params.g0 * r.value[idx(j)].dot(kinv * r.value[idx(i)]);
        }
        const auto dofs = rt0_dofs(mesh, vel, t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) trip.emplace_back(static_cast<int>(dofs[idx(i)]), static_cast<int>(dofs[idx(j)]), local(i, j));
    }
    return from_triplets(vel.dim(), vel.dim(), trip);
}

SparseMatrix assemble_b_p(const TriMesh& mesh, const DarcyVelocitySpace& vel, const DarcyPressureSpace& pres,
                          const ModelParams& params)
{
    Triplets trip;
    for (Index t : pres.triangles) {
        const auto corners = mesh.corners(t);
        const auto r = eval_rt0(corners, rt0_signs(mesh, t), corners[0]);
        const double area = mesh.triangle_area(t);
        const auto dofs = rt0_dofs(mesh, vel, t);
        const Index row = pres.tri_dof[idx(t)];
        for (int j = 0; j < 3; ++j) {
            trip.emplace_back(static_cast<int>(row), static_cast<int>(dofs[idx(j)]), params.g0 * r.div[idx(j)] * area);
        }
    }
    return from_triplets(pres.dim(), vel.dim(), trip);
}

SparseMatrix assemble_darcy_mass(const TriMesh& mesh, const DarcyPressureSpace& pres)
{
    Triplets trip;
    for (Index t : pres.triangles) {
        const Index k = pres.tri_dof[idx(t)];
        trip.emplace_back(static_cast<int>(k), static_cast<int>(k), mesh.triangle_area(t));
    }
    return from_triplets(pres.dim(), pres.dim(), trip);
}

SparseMatrix assemble_a_gamma(const TriMesh& mesh, const Spaces& spaces, InterfaceSide side, const ModelParams& params,
                              const QuadratureOptions& quad)
{
    const auto& vel_f = spaces.stokes_velocity;
    const auto& vel_p = spaces.darcy_velocity;
    const auto& pres = spaces.darcy_pressure;
    Triplets trip;
    for_each_interface_point(mesh, quad, [&](const InterfaceEdge& ie, const InterfacePoint& p) {
        const int row = static_cast<int>(pres.tri_dof[idx(ie.porous_tri)]);
        const Vec2& n = ie.normal;
        if (side == InterfaceSide::Fluid) {
            const auto dofs = vel_f.element_dofs(mesh, ie.fluid_tri);
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a < 4; ++a) {
                    const double v = p.fluid.value[idx(a)] * n[c];
                    if (v != 0.0) trip.emplace_back(row, static_cast<int>(dofs[idx(4 * c + a)]), p.weight * params.g0 * v);
                }
        } else {
            const auto dofs = rt0_dofs(mesh, vel_p, ie.porous_tri);
            for (int j = 0; j < 3; ++j) {
                const double v = p.porous.value[idx(j)].dot(n);
                if (v != 0.0) trip.emplace_back(row, static_cast<int>(dofs[idx(j)]), p.weight * params.g0 * v);
            }
        }
    });
    const Index cols = side == InterfaceSide::Fluid ? vel_f.dim() : vel_p.dim();
    return from_triplets(pres.dim(), cols, trip);
}

PenaltyBlocks assemble_penalty(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                               const QuadratureOptions& quad)
{
    const auto& vel_f = spaces.stokes_velocity;
    const auto& vel_p = spaces.darcy_velocity;
    const double gamma = params.gamma;
    Triplets ff, fp, pp;
    for_each_interface_point(mesh, quad, [&](const InterfaceEdge& ie, const InterfacePoint& p) {
        const Vec2& n = ie.normal;
        const auto fdofs = vel_f.element_dofs(mesh, ie.fluid_tri);
        const auto pdofs = rt0_dofs(mesh, vel_p, ie.porous_tri);
        std::array<double, 8> fn{};
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a) fn[idx(4 * c + a)] = p.fluid.value[idx(a)] * n[c];
        std::array<double, 3> pn{};
        for (int j = 0; j < 3; ++j) pn[idx(j)] = p.porous.value[idx(j)].dot(n);
        const double w = p.weight * gamma;
        for (int i = 0; i < 8; ++i) {
            if (fn[idx(i)] == 0.0) continue;
            for (int j = 0; j < 8; ++j) {
                if (fn[idx(j)] != 0.0)
                    ff.emplace_back(static_cast<int>(fdofs[idx(i)]), static_cast<int>(fdofs[idx(j)]), w * fn[idx(i)] * fn[idx(j)]);
            }
            for (int j = 0; j < 3; ++j) {
                if (pn[idx(j)] != 0.0)
                    fp.emplace_back(static_cast<int>(fdofs[idx(i)]), static_cast<int>(pdofs[idx(j)]), w * fn[idx(i)] * pn[idx(j)]);
            }
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (pn[idx(i)] != 0.0 && pn[idx(j)] != 0.0)
                    pp.emplace_back(static_cast<int>(pdofs[idx(i)]), static_cast<int>(pdofs[idx(j)]), w * pn[idx(i)] * pn[idx(j)]);
            }
    });
    PenaltyBlocks blocks;
    blocks.ff = from_triplets(vel_f.dim(), vel_f.dim(), ff);
    blocks.fp = from_triplets(vel_f.dim(), vel_p.dim(), fp);
    blocks.pf = SparseMatrix(blocks.fp.transpose());
    blocks.pp = from_triplets(vel_p.dim(), vel_p.dim(), pp);
    return blocks;
}

Operators assemble_operators(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                             const QuadratureOptions& quad)
{
    Operators op;
    op.stokes_mass = assemble_stokes_mass(mesh, spaces.stokes_velocity, quad);
    op.a_f = assemble_a_f(mesh, spaces.stokes_velocity, params, quad);
    op.b_f = assemble_b_f(mesh, spaces.stokes_velocity, spaces.stokes_pressure, quad);
    op.a_p = assemble_a_p(mesh, spaces.darcy_velocity, params, quad);
    op.b_p = assemble_b_p(mesh, spaces.darcy_velocity, spaces.darcy_pressure, params);
    op.darcy_mass = assemble_darcy_mass(mesh, spaces.darcy_pressure);
    op.gamma_f = assemble_a_gamma(mesh, spaces, InterfaceSide::Fluid, params, quad);
    op.gamma_p = assemble_a_gamma(mesh, spaces, InterfaceSide::Porous, params, quad);
    op.penalty = assemble_penalty(mesh, spaces, params, quad);
    return op;
}

Vec2 interface_traction_residual(const ManufacturedCase& mcase, const ModelParams& params, const Vec2& x,
                                 const Vec2& normal, double t)
{
    const Mat2 g = mcase.grad_u_f(x, t);
    const Mat2 stress = params.nu * (g + g.transpose()) - mcase.p_f(x, t) * Mat2::Identity();
    const Vec2 tau(normal.y(), -normal.x());
    const double normal_stress = -normal.dot(stress * normal);
    const double shear_stress = -normal.dot(stress * tau);
    return Vec2(normal_stress - params.g0 * mcase.phi_p(x, t), shear_stress - params.bjs_coeff() * mcase.u_f(x, t).dot(tau));
}

LoadVectors assemble_loads(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                           const ManufacturedCase& mcase, const BoundaryData& data, double t,
                           const QuadratureOptions& quad, bool interface_traction_correction)
{
    const auto& vel_f = spaces.stokes_velocity;
    const auto& vel_p = spaces.darcy_velocity;
    const auto& pres = spaces.darcy_pressure;
    const auto rule = quad_triangle(quad.volume_degree);
    LoadVectors loads;
    loads.fluid_momentum = Vector::Zero(vel_f.dim());
    loads.darcy_momentum = Vector::Zero(vel_p.dim());
    loads.darcy_mass = Vector::Zero(pres.dim());

    for (Index t_id : vel_f.triangles) {
        const AffineMap map = triangle_map(mesh, t_id);
        const auto dofs = vel_f.element_dofs(mesh, t_id);
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto s = mini_shape(map, rule.points[q]);
            const Vec2 f = mcase.f_f(map.to_physical(rule.points[q]), t);
            const double w = rule.weights[q] * map.det();
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a < 4; ++a) loads.fluid_momentum[dofs[idx(4 * c + a)]] += w * f[c] * s.value[idx(a)];
        }
    }
    if (interface_traction_correction) {
        for_each_interface_point(mesh, quad, [&](const InterfaceEdge& ie, const InterfacePoint& p) {
            const Vec2 r = interface_traction_residual(mcase, params, p.x, ie.normal, t);
            const Vec2 tau(ie.normal.y(), -ie.normal.x());
            const Vec2 traction = r[0] * ie.normal + r[1] * tau;
            const auto dofs = vel_f.element_dofs(mesh, ie.fluid_tri);
            for (int c = 0; c < 2; ++c)
                for (int a = 0; a < 4; ++a)
                    loads.fluid_momentum[dofs[idx(4 * c + a)]] -= p.weight * traction[c] * p.fluid.value[idx(a)];
        });
    }

    for (Index t_id : pres.triangles) {
        const AffineMap map = triangle_map(mesh, t_id);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            sum += rule.weights[q] * map.det() * mcase.f_p(map.to_physical(rule.points[q]), t);
        }
        loads.darcy_mass[pres.tri_dof[idx(t_id)]] = params.g0 * sum;
    }

    const auto erule = quad_edge(quad.edge_degree);
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        if (mesh.edge_tag[idx(e)] != EdgeTag::GammaPD) continue;
        const auto& ed = mesh.edges[idx(e)];
        const Index t_id = ed.tri[0];
        const auto& te = mesh.triangle_edges[idx(t_id)];
        const int k = static_cast<int>(std::find(te.begin(), te.end(), e) - te.begin());
        const Vec2 n_p = mesh.edge_sign(t_id, k) * mesh.edge_normal(e);
        const Vec2 a = mesh.vertices[idx(ed.v[0])];
        const Vec2 b = mesh.vertices[idx(ed.v[1])];
        const double len = (b - a).norm();
        const auto corners = mesh.corners(t_id);
        const auto signs = rt0_signs(mesh, t_id);
        const auto dofs = rt0_dofs(mesh, vel_p, t_id);
        for (std::size_t q = 0; q < erule.points.size(); ++q) {
            const Vec2 x = a + erule.points[q] * (b - a);
            const auto r = eval_rt0(corners, signs, x);
            const double w = erule.weights[q] * len * params.g0 * data.porous_pressure(x, t);
            for (int j = 0; j < 3; ++j) loads.darcy_momentum[dofs[idx(j)]] -= w * r.value[idx(j)].dot(n_p);
        }
    }
    return loads;
}

RitzRhs assemble_ritz_rhs(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                          const ManufacturedCase& mcase, double t, const QuadratureOptions& quad)
{
    const auto& vel_f = spaces.stokes_velocity;
    const auto& pres_f = spaces.stokes_pressure;
    const auto& vel_p = spaces.darcy_velocity;
    const auto& pres_p = spaces.darcy_pressure;
    const auto rule = quad_triangle(quad.volume_degree);
    const double nu = params.nu;
    const double g0 = params.g0;
    const Mat2 kinv = params.k_inverse();

    RitzRhs rhs;
    rhs.fluid_momentum = Vector::Zero(vel_f.dim());
    rhs.fluid_mass = Vector::Zero(pres_f.dim());
    rhs.darcy_momentum = Vector::Zero(vel_p.dim());
    rhs.darcy_mass = Vector::Zero(pres_p.dim());

    for (Index t_id : vel_f.triangles) {
        const AffineMap map = triangle_map(mesh, t_id);
        const auto dofs = vel_f.element_dofs(mesh, t_id);
        const auto& tv = mesh.triangles[idx(t_id)];
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto s = mini_shape(map, rule.points[q]);
            const Vec2 x = map.to_physical(rule.points[q]);
            const double w = rule.weights[q] * map.det();
            const Mat2 g = mcase.grad_u_f(x, t);
            const Mat2 sym = 0.5 * (g + g.transpose());
            const double p = mcase.p_f(x, t);
            for (int a = 0; a < 4; ++a) {
                const Vec2 stress_dot_grad = 2.0 * nu * sym * s.grad[idx(a)];
                for (int c = 0; c < 2; ++c) {
                    rhs.fluid_momentum[dofs[idx(4 * c + a)]] += w * (stress_dot_grad[c] - p * s.grad[idx(a)][c]);
                }
            }
            const double div = g.trace();
            for (int k = 0; k < 3; ++k) rhs.fluid_mass[pres_f.vertex_dof[idx(tv[idx(k)])]] += w * s.value[idx(k)] * div;
        }
    }

    for (Index t_id : pres_p.triangles) {
        const AffineMap map = triangle_map(mesh, t_id);
        const auto corners = mesh.corners(t_id);
        const auto signs = rt0_signs(mesh, t_id);
        const auto dofs = rt0_dofs(mesh, vel_p, t_id);
        double mass = 0.0;
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const Vec2 x = map.to_physical(rule.points[q]);
            const double w = rule.weights[q] * map.det();
            const auto r = eval_rt0(corners, signs, x);
            const Vec2 kinv_u = kinv * mcase.u_p(x, t);
            const double phi = mcase.phi_p(x, t);
            for (int j = 0; j < 3; ++j) {
                rhs.darcy_momentum[dofs[idx(j)]] += w * g0 * (kinv_u.dot(r.value[idx(j)]) - phi * r.div[idx(j)]);
            }
            mass += w * g0 * mcase.div_u_p(x, t);
        }
        rhs.darcy_mass[pres_p.tri_dof[idx(t_id)]] += mass;
    }

    const double bjs = params.bjs_coeff();
    for_each_interface_point(mesh, quad, [&](const InterfaceEdge& ie, const InterfacePoint& p) {
        const Vec2& n = ie.normal;
        const Vec2 tau(n.y(), -n.x());
        const Vec2 uf = mcase.u_f(p.x, t);
        const double phi = mcase.phi_p(p.x, t);
        const double jump = (uf - mcase.u_p(p.x, t)).dot(n);
        const auto fdofs = vel_f.element_dofs(mesh, ie.fluid_tri);
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a) {
                const double nv = p.fluid.value[idx(a)] * n[c];
                const double tv = p.fluid.value[idx(a)] * tau[c];
                rhs.fluid_momentum[fdofs[idx(4 * c + a)]] +=
                    p.weight * (bjs * uf.dot(tau) * tv + g0 * phi * nv + params.gamma * jump * nv);
            }
        const auto pdofs = rt0_dofs(mesh, vel_p, ie.porous_tri);
        for (int j = 0; j < 3; ++j) {
            const double nv = p.porous.value[idx(j)].dot(n);
            rhs.darcy_momentum[pdofs[idx(j)]] -= p.weight * (g0 * phi * nv + params.gamma * jump * nv);
        }
        rhs.darcy_mass[pres_p.tri_dof[idx(ie.porous_tri)]] -= p.weight * g0 * jump;
    });
    return rhs;
}

}  // namespace sdarcy
