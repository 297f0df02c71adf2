#include "sdarcy/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "sdarcy/fem_core.hpp"

namespace sdarcy {

namespace {

std::size_t idx(Index i) { return static_cast<std::size_t>(i); }

void require_size(const Vector& coeffs, Index dim, const char* space)
{
    if (coeffs.size() != dim) {
        throw std::invalid_argument(std::string("coefficient vector of length ") + std::to_string(coeffs.size()) +
                                    " does not belong to the " + space + " space of dimension " + std::to_string(dim));
    }
}

template <class Fn>
double integrate_squared(const TriMesh& mesh, const std::vector<Index>& triangles, int degree, Fn&& pointwise)
{
    const auto rule = quad_triangle(degree);
    double sum = 0.0;
    for (Index t : triangles) {
        const AffineMap map(mesh.corners(t));
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            sum += rule.weights[q] * map.det() * pointwise(t, map, rule.points[q]);
        }
    }
    return std::sqrt(sum);
}

std::array<int, 3> rt0_signs(const TriMesh& mesh, Index t)
{
    return {mesh.edge_sign(t, 0), mesh.edge_sign(t, 1), mesh.edge_sign(t, 2)};
}

std::vector<Index> porous_triangles(const TriMesh& mesh)
{
    std::vector<Index> out;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_region[idx(t)] == Region::Porous) out.push_back(t);
    }
    return out;
}

Vec2 stokes_velocity_at(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs, Index tri,
                        const MiniShape& s)
{
    const auto dofs = space.element_dofs(mesh, tri);
    Vec2 u = Vec2::Zero();
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 4; ++a) u[c] += coeffs[dofs[idx(4 * c + a)]] * s.value[idx(a)];
    return u;
}

}  // namespace

Vec2 eval_stokes_velocity(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs, Index tri,
                          const Vec2& x)
{
    const AffineMap map(mesh.corners(tri));
    return stokes_velocity_at(mesh, space, coeffs, tri, mini_shape(map, map.to_reference(x)));
}

double eval_stokes_pressure(const TriMesh& mesh, const StokesPressureSpace& space, const Vector& coeffs, Index tri,
                            const Vec2& x)
{
    const AffineMap map(mesh.corners(tri));
    const auto p1 = eval_p1(map.to_reference(x));
    const auto& tv = mesh.triangles[idx(tri)];
    double p = 0.0;
    for (std::size_t k = 0; k < 3; ++k) p += coeffs[space.vertex_dof[idx(tv[k])]] * p1.value[k];
    return p;
}

Vec2 eval_darcy_velocity(const TriMesh& mesh, const DarcyVelocitySpace& space, const Vector& coeffs, Index tri,
                         const Vec2& x)
{
    const auto r = eval_rt0(mesh.corners(tri), rt0_signs(mesh, tri), x);
    const auto& te = mesh.triangle_edges[idx(tri)];
    Vec2 u = Vec2::Zero();
    for (std::size_t k = 0; k < 3; ++k) u += coeffs[space.edge_dof[idx(te[k])]] * r.value[k];
    return u;
}

double l2_error(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs, const VectorField& exact,
                double t, int degree)
{
    require_size(coeffs, space.dim(), "Stokes velocity");
    return integrate_squared(mesh, space.triangles, degree, [&](Index tri, const AffineMap& map, const Vec2& ref) {
        const Vec2 uh = stokes_velocity_at(mesh, space, coeffs, tri, mini_shape(map, ref));
        return (uh - exact(map.to_physical(ref), t)).squaredNorm();
    });
}

double l2_error(const TriMesh& mesh, const StokesPressureSpace& space, const Vector& coeffs, const ScalarField& exact,
                double t, int degree)
{
    require_size(coeffs, space.dim(), "Stokes pressure");
    std::vector<Index> tris;
    for (Index tri = 0; tri < mesh.num_triangles(); ++tri) {
        if (mesh.triangle_region[idx(tri)] == Region::Fluid) tris.push_back(tri);
    }
    return integrate_squared(mesh, tris, degree, [&](Index tri, const AffineMap& map, const Vec2& ref) {
        const auto p1 = eval_p1(ref);
        const auto& tv = mesh.triangles[idx(tri)];
        double ph = 0.0;
        for (std::size_t k = 0; k < 3; ++k) ph += coeffs[space.vertex_dof[idx(tv[k])]] * p1.value[k];
        const double d = ph - exact(map.to_physical(ref), t);
        return d * d;
    });
}

double l2_error(const TriMesh& mesh, const DarcyVelocitySpace& space, const Vector& coeffs, const VectorField& exact,
                double t, int degree)
{
    require_size(coeffs, space.dim(), "Darcy velocity");
    return integrate_squared(mesh, porous_triangles(mesh), degree, [&](Index tri, const AffineMap& map, const Vec2& ref) {
        const Vec2 x = map.to_physical(ref);
        return (eval_darcy_velocity(mesh, space, coeffs, tri, x) - exact(x, t)).squaredNorm();
    });
}

double l2_error(const TriMesh& mesh, const DarcyPressureSpace& space, const Vector& coeffs, const ScalarField& exact,
                double t, int degree)
{
    require_size(coeffs, space.dim(), "Darcy pressure");
    return integrate_squared(mesh, space.triangles, degree, [&](Index tri, const AffineMap& map, const Vec2& ref) {
        const double d = coeffs[space.tri_dof[idx(tri)]] - exact(map.to_physical(ref), t);
        return d * d;
    });
}

double h1_seminorm_error(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs,
                         const TensorField& exact_grad, double t, int degree)
{
    require_size(coeffs, space.dim(), "Stokes velocity");
    return integrate_squared(mesh, space.triangles, degree, [&](Index tri, const AffineMap& map, const Vec2& ref) {
        const auto s = mini_shape(map, ref);
        const auto dofs = space.element_dofs(mesh, tri);
        Mat2 g = Mat2::Zero();
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a) g.row(c) += coeffs[dofs[idx(4 * c + a)]] * s.grad[idx(a)].transpose();
        return (g - exact_grad(map.to_physical(ref), t)).squaredNorm();
    });
}

double interface_jump_norm(const TriMesh& mesh, const Spaces& spaces, const FieldState& state, int edge_degree)
{
    require_size(state.u_f, spaces.stokes_velocity.dim(), "Stokes velocity");
    require_size(state.u_p, spaces.darcy_velocity.dim(), "Darcy velocity");
    const auto rule = quad_edge(edge_degree);
    double sum = 0.0;
    for (const auto& ie : mesh.interface_edges) {
        const auto& ed = mesh.edges[idx(ie.edge)];
        const Vec2 a = mesh.vertices[idx(ed.v[0])];
        const Vec2 b = mesh.vertices[idx(ed.v[1])];
        const double len = (b - a).norm();
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const Vec2 x = a + rule.points[q] * (b - a);
            const Vec2 uf = eval_stokes_velocity(mesh, spaces.stokes_velocity, state.u_f, ie.fluid_tri, x);
            const Vec2 up = eval_darcy_velocity(mesh, spaces.darcy_velocity, state.u_p, ie.porous_tri, x);
            const double jump = (uf - up).dot(ie.normal);
            sum += rule.weights[q] * len * jump * jump;
        }
    }
    return std::sqrt(sum);
}

double max_discrete_divergence(const SparseMatrix& b_f, const Vector& u_f)
{
    const Vector r = b_f * u_f;
    return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

TimeGrid TimeRule::grid(int n) const
{
    if (kind == Kind::HSquared) {
        const double h = 1.0 / n;
        return TimeGrid::from_step(h * h, final_time);
    }
    return TimeGrid::from_step(tau, final_time);
}

std::optional<double> ConvergenceReport::rate(std::size_t row, double ConvergenceRow::*column) const
{
    if (row == 0 || row >= rows.size()) return std::nullopt;
    return eoc(rows[row - 1].*column, rows[row].*column);
}

double eoc(double coarse_error, double fine_error) { return std::log2(coarse_error / fine_error); }

LevelResult run_level(const StudyConfig& config, int n, const ManufacturedCase& mcase)
{
    const auto start = std::chrono::steady_clock::now();
    LevelResult result{ConvergenceRow{}, build_structured_mesh(config.domain, n), FieldState{}};
    const TriMesh& mesh = result.mesh;
    const Spaces spaces = build_spaces(mesh);
    const TimeGrid grid = config.time.grid(n);
    const FieldState init = initial_state(mesh, spaces, config.params, mcase, config.solver);
    result.state = run_transient(mesh, spaces, config.params, grid, mcase, init, config.solver);

    const double t = grid.final_time();
    const int deg = config.solver.quad.volume_degree;
    ConvergenceRow& row = result.row;
    row.n = n;
    row.h = 1.0 / n;
    row.diameter = mesh.h;
    row.tau = grid.tau;
    row.steps = grid.steps;
    row.err_uf_l2 = l2_error(mesh, spaces.stokes_velocity, result.state.u_f, mcase.u_f, t, deg);
    row.err_up_l2 = l2_error(mesh, spaces.darcy_velocity, result.state.u_p, mcase.u_p, t, deg);
    row.err_phi_l2 = l2_error(mesh, spaces.darcy_pressure, result.state.phi_p, mcase.phi_p, t, deg);
    row.err_pf_l2 = l2_error(mesh, spaces.stokes_pressure, result.state.p_f, mcase.p_f, t, deg);
    row.err_uf_h1 = h1_seminorm_error(mesh, spaces.stokes_velocity, result.state.u_f, mcase.grad_u_f, t, deg);
    row.jump = interface_jump_norm(mesh, spaces, result.state, config.solver.quad.edge_degree);
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ConvergenceReport run_convergence_study(const StudyConfig& config, const ManufacturedCase& mcase)
{
    const auto& levels = config.subdivisions;
    if (levels.empty()) {
        throw std::invalid_argument("convergence study needs at least one mesh level");
    }
    for (std::size_t k = 1; k < levels.size(); ++k) {
        if (levels[k] != 2 * levels[k - 1]) {
            throw std::invalid_argument("mesh sizes must halve from one level to the next");
        }
    }

    std::vector<std::optional<ConvergenceRow>> rows(levels.size());
    std::vector<std::exception_ptr> errors(levels.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < levels.size(); k = next++) {
            try {
                rows[k] = run_level(config, levels[k], mcase).row;
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::clamp<unsigned>(config.jobs, 1u, static_cast<unsigned>(levels.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ConvergenceReport report;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (errors[k]) {
            try {
                std::rethrow_exception(errors[k]);
            } catch (const std::exception& e) {
                throw StudyFailure(1.0 / levels[k], e.what(), report);
            }
        }
        report.rows.push_back(*rows[k]);
    }
    return report;
}

std::vector<RitzRow> run_ritz_study(const StudyConfig& config, const ManufacturedCase& mcase, double t)
{
    std::vector<RitzRow> out;
    const int deg = config.solver.quad.volume_degree;
    for (int n : config.subdivisions) {
        const TriMesh mesh = build_structured_mesh(config.domain, n);
        const Spaces spaces = build_spaces(mesh);
        const FieldState s = ritz_projection(mesh, spaces, config.params, mcase, t, config.solver);
        RitzRow row;
        row.n = n;
        row.h = 1.0 / n;
        row.err_uf_l2 = l2_error(mesh, spaces.stokes_velocity, s.u_f, mcase.u_f, t, deg);
        row.err_uf_h1 = h1_seminorm_error(mesh, spaces.stokes_velocity, s.u_f, mcase.grad_u_f, t, deg);
        row.err_up_l2 = l2_error(mesh, spaces.darcy_velocity, s.u_p, mcase.u_p, t, deg);
        row.err_phi_l2 = l2_error(mesh, spaces.darcy_pressure, s.phi_p, mcase.phi_p, t, deg);
        out.push_back(row);
    }
    return out;
}

}  // namespace sdarcy
