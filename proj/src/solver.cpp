#include "sdarcy/solver.hpp"

#include <cmath>

#include "sdarcy/fem_core.hpp"

namespace sdarcy {

FieldState FieldState::zeros(const Spaces& spaces, double t)
{
    FieldState s;
    s.t = t;
    s.u_f = Vector::Zero(spaces.stokes_velocity.dim());
    s.p_f = Vector::Zero(spaces.stokes_pressure.dim());
    s.u_p = Vector::Zero(spaces.darcy_velocity.dim());
    s.phi_p = Vector::Zero(spaces.darcy_pressure.dim());
    return s;
}

void TimeGrid::validate() const
{
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("time step must be positive");
    }
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
}

TimeGrid TimeGrid::from_step(double tau, double final_time)
{
    if (!(tau > 0.0) || !(final_time > 0.0)) {
        throw std::invalid_argument("time step and final time must be positive");
    }
    const double n = final_time / tau;
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-8 * rounded) {
        throw std::invalid_argument("final time is not an integer multiple of the time step");
    }
    TimeGrid g{final_time / rounded, static_cast<int>(rounded)};
    return g;
}

DecoupledScheme::DecoupledScheme(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params, double tau,
                                 const SolverOptions& options)
    : mesh_(mesh), spaces_(spaces), params_(params), tau_(tau), options_(options)
{
    params_.validate(/*allow_zero_penalty=*/true);
    if (!(tau > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
    ops_ = assemble_operators(mesh, spaces, params_, options_.quad);

    const Index nup = spaces.darcy_velocity.dim();
    const Index nphi = spaces.darcy_pressure.dim();
    {
        const std::array<Index, 3> off{0, nup, nup + nphi};
        const SparseMatrix a = ops_.a_p + ops_.penalty.pp;
        const SparseMatrix bt = SparseMatrix((ops_.b_p + ops_.gamma_p).transpose());
        const SparseMatrix b = ops_.b_p + ops_.gamma_p;
        const BlockEntry entries[] = {
            {0, 0, &a, 1.0},
            {0, 1, &bt, -1.0},
            {1, 0, &b, 1.0},
            {1, 1, &ops_.darcy_mass, params_.g0 * params_.S0 / tau_},
        };
        darcy_matrix_ = assemble_blocks(off, entries);
        darcy_elim_ = EssentialElimination(darcy_matrix_, spaces.darcy_velocity.essential);
    }

    const Index nuf = spaces.stokes_velocity.dim();
    const Index npf = spaces.stokes_pressure.dim();
    {
        const std::array<Index, 3> off{0, nuf, nuf + npf};
        const SparseMatrix a = SparseMatrix(ops_.stokes_mass / tau_) + ops_.a_f + ops_.penalty.ff;
        const SparseMatrix bt = SparseMatrix(ops_.b_f.transpose());
        const BlockEntry entries[] = {
            {0, 0, &a, 1.0},
            {0, 1, &bt, -1.0},
            {1, 0, &ops_.b_f, 1.0},
        };
        stokes_matrix_ = assemble_blocks(off, entries);
        stokes_elim_ = EssentialElimination(stokes_matrix_, spaces.stokes_velocity.dirichlet);
    }

    darcy_solver_ = std::make_unique<SparseSolver>(options_.tolerance);
    stokes_solver_ = std::make_unique<SparseSolver>(options_.tolerance);
    try {
        darcy_solver_->factor(darcy_elim_.matrix());
    } catch (const SolverError& e) {
        throw SolverError(std::string("Darcy system: ") + e.what() +
                          (params_.gamma == 0.0 && params_.S0 == 0.0 ? " (gamma = 0 and S0 = 0 may be rank deficient)" : ""));
    }
    try {
        stokes_solver_->factor(stokes_elim_.matrix());
    } catch (const SolverError& e) {
        throw SolverError(std::string("Stokes system: ") + e.what());
    }
}

Vector DecoupledScheme::darcy_rhs(const FieldState& state, const LoadVectors& loads) const
{
    const Index nup = spaces_.darcy_velocity.dim();
    const Index nphi = spaces_.darcy_pressure.dim();
    if (state.u_f.size() != spaces_.stokes_velocity.dim() || state.phi_p.size() != nphi) {
        throw std::invalid_argument("state does not match the discrete spaces");
    }
    Vector rhs(nup + nphi);
    rhs.head(nup) = ops_.penalty.pf * state.u_f + loads.darcy_momentum;
    rhs.tail(nphi) = loads.darcy_mass + (params_.g0 * params_.S0 / tau_) * (ops_.darcy_mass * state.phi_p) +
                     ops_.gamma_f * state.u_f;
    return rhs;
}

Vector DecoupledScheme::stokes_rhs(const FieldState& state, const DarcyFields& darcy_next, const LoadVectors& loads) const
{
    const Index nuf = spaces_.stokes_velocity.dim();
    const Index npf = spaces_.stokes_pressure.dim();
    if (state.u_f.size() != nuf || darcy_next.u_p.size() != spaces_.darcy_velocity.dim() ||
        darcy_next.phi_p.size() != spaces_.darcy_pressure.dim()) {
        throw std::invalid_argument("state does not match the discrete spaces");
    }
    Vector rhs = Vector::Zero(nuf + npf);
    rhs.head(nuf) = loads.fluid_momentum + (ops_.stokes_mass * state.u_f) / tau_ -
                    ops_.gamma_f.transpose() * darcy_next.phi_p + ops_.penalty.fp * darcy_next.u_p;
    return rhs;
}

DarcyFields DecoupledScheme::darcy_step(const FieldState& state, double t_next, const LoadVectors& loads,
                                        const BoundaryData& data) const
{
    Vector rhs = darcy_rhs(state, loads);
    const auto flux = darcy_flux_values(mesh_, spaces_.darcy_velocity, data, t_next, options_.quad.edge_degree);
    darcy_elim_.lift(rhs, flux);
    const Vector x = darcy_solver_->solve(rhs);
    const Index nup = spaces_.darcy_velocity.dim();
    return {x.head(nup), x.tail(x.size() - nup)};
}

StokesFields DecoupledScheme::stokes_step(const FieldState& state, const DarcyFields& darcy_next, double t_next,
                                          const LoadVectors& loads, const BoundaryData& data) const
{
    Vector rhs = stokes_rhs(state, darcy_next, loads);
    const auto values = stokes_dirichlet_values(mesh_, spaces_.stokes_velocity, data, t_next);
    stokes_elim_.lift(rhs, values);
    const Vector x = stokes_solver_->solve(rhs);
    const Index nuf = spaces_.stokes_velocity.dim();
    return {x.head(nuf), x.tail(x.size() - nuf)};
}

FieldState DecoupledScheme::step(const FieldState& state, const ManufacturedCase& mcase, const BoundaryData& data) const
{
    const double t_next = state.t + tau_;
    const LoadVectors loads =
        assemble_loads(mesh_, spaces_, params_, mcase, data, t_next, options_.quad, options_.interface_traction_correction);
    DarcyFields darcy = darcy_step(state, t_next, loads, data);
    StokesFields stokes = stokes_step(state, darcy, t_next, loads, data);
    FieldState next;
    next.t = t_next;
    next.u_f = std::move(stokes.u_f);
    next.p_f = std::move(stokes.p_f);
    next.u_p = std::move(darcy.u_p);
    next.phi_p = std::move(darcy.phi_p);
    return next;
}

RitzSystem assemble_ritz_system(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                                const ManufacturedCase& mcase, double t, const SolverOptions& options)
{
    params.validate();
    const Operators ops = assemble_operators(mesh, spaces, params, options.quad);
    const Index nuf = spaces.stokes_velocity.dim();
    const Index npf = spaces.stokes_pressure.dim();
    const Index nup = spaces.darcy_velocity.dim();
    const Index nphi = spaces.darcy_pressure.dim();

    RitzSystem sys;
    sys.offsets = {0, nuf, nuf + npf, nuf + npf + nup, nuf + npf + nup + nphi};

    const SparseMatrix a_f = ops.a_f + ops.penalty.ff;
    const SparseMatrix b_ft = SparseMatrix(ops.b_f.transpose());
    const SparseMatrix g_ft = SparseMatrix(ops.gamma_f.transpose());
    const SparseMatrix a_p = ops.a_p + ops.penalty.pp;
    const SparseMatrix b_pt = SparseMatrix((ops.b_p + ops.gamma_p).transpose());
    const SparseMatrix b_p = ops.b_p + ops.gamma_p;
    const BlockEntry entries[] = {
        {0, 0, &a_f, 1.0},        {0, 1, &b_ft, -1.0}, {0, 2, &ops.penalty.fp, -1.0}, {0, 3, &g_ft, 1.0},
        {1, 0, &ops.b_f, 1.0},
        {2, 0, &ops.penalty.pf, -1.0}, {2, 2, &a_p, 1.0}, {2, 3, &b_pt, -1.0},
        {3, 0, &ops.gamma_f, -1.0}, {3, 2, &b_p, 1.0},
    };
    sys.matrix = assemble_blocks(sys.offsets, entries);

    const RitzRhs r = assemble_ritz_rhs(mesh, spaces, params, mcase, t, options.quad);
    sys.rhs.resize(sys.offsets[4]);
    sys.rhs << r.fluid_momentum, r.fluid_mass, r.darcy_momentum, r.darcy_mass;

    const BoundaryData data = mcase.boundary_data();
    sys.essential = spaces.stokes_velocity.dirichlet;
    sys.essential_values = stokes_dirichlet_values(mesh, spaces.stokes_velocity, data, t);
    const auto flux = darcy_flux_values(mesh, spaces.darcy_velocity, data, t, options.quad.edge_degree);
    for (std::size_t k = 0; k < flux.size(); ++k) {
        sys.essential.push_back(spaces.darcy_velocity.essential[k] + sys.offsets[2]);
        sys.essential_values.push_back(flux[k]);
    }
    return sys;
}

FieldState ritz_projection(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                           const ManufacturedCase& mcase, double t, const SolverOptions& options)
{
    const RitzSystem sys = assemble_ritz_system(mesh, spaces, params, mcase, t, options);
    const EssentialElimination elim(sys.matrix, sys.essential);
    Vector rhs = sys.rhs;
    elim.lift(rhs, sys.essential_values);
    SparseSolver solver(options.tolerance);
    try {
        solver.factor(elim.matrix());
    } catch (const SolverError& e) {
        throw SolverError(std::string("Ritz projection: ") + e.what());
    }
    const Vector x = solver.solve(rhs);
    FieldState s;
    s.t = t;
    s.u_f = x.segment(sys.offsets[0], sys.offsets[1] - sys.offsets[0]);
    s.p_f = x.segment(sys.offsets[1], sys.offsets[2] - sys.offsets[1]);
    s.u_p = x.segment(sys.offsets[2], sys.offsets[3] - sys.offsets[2]);
    s.phi_p = x.segment(sys.offsets[3], sys.offsets[4] - sys.offsets[3]);
    return s;
}

Vector interpolate_stokes_velocity(const TriMesh& mesh, const StokesVelocitySpace& space,
                                   const std::function<Vec2(const Vec2&, double)>& field, double t)
{
    Vector u = Vector::Zero(space.dim());
    for (Index lv = 0; lv < space.num_vertices(); ++lv) {
        const Vec2 value = field(mesh.vertices[static_cast<std::size_t>(space.vertices[static_cast<std::size_t>(lv)])], t);
        u[space.vertex_component_dof(lv, 0)] = value.x();
        u[space.vertex_component_dof(lv, 1)] = value.y();
    }
    return u;
}

Vector interpolate_darcy_velocity(const TriMesh& mesh, const DarcyVelocitySpace& space,
                                  const std::function<Vec2(const Vec2&, double)>& field, double t, int edge_degree)
{
    const auto rule = quad_edge(edge_degree);
    Vector u(space.dim());
    for (Index dof = 0; dof < space.dim(); ++dof) {
        const Index e = space.edges[static_cast<std::size_t>(dof)];
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        const Vec2 a = mesh.vertices[static_cast<std::size_t>(ed.v[0])];
        const Vec2 b = mesh.vertices[static_cast<std::size_t>(ed.v[1])];
        const Vec2 n = mesh.edge_normal(e);
        double mean = 0.0;
        for (std::size_t q = 0; q < rule.points.size(); ++q) mean += rule.weights[q] * field(a + rule.points[q] * (b - a), t).dot(n);
        u[dof] = mean;
    }
    return u;
}

FieldState initial_state(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                         const ManufacturedCase& mcase, const SolverOptions& options)
{
    FieldState s = ritz_projection(mesh, spaces, params, mcase, 0.0, options);
    s.u_f = interpolate_stokes_velocity(mesh, spaces.stokes_velocity, mcase.u_f, 0.0);
    return s;
}

FieldState run_transient(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params, const TimeGrid& grid,
                         const ManufacturedCase& mcase, const FieldState& initial, const SolverOptions& options,
                         const StepHook& hook)
{
    grid.validate();
    if (grid.steps == 0) {
        return initial;
    }
    const DecoupledScheme scheme(mesh, spaces, params, grid.tau, options);
    const BoundaryData data = mcase.boundary_data();
    FieldState state = initial;
    for (int n = 1; n <= grid.steps; ++n) {
        try {
            state = scheme.step(state, mcase, data);
            state.t = grid.time(n);
        } catch (const SolverError& e) {
            throw StepFailure(n, e.what());
        }
        if (!state.u_f.allFinite() || !state.phi_p.allFinite()) {
            throw StepFailure(n, "non-finite solution");
        }
        if (hook) hook(n, state);
    }
    return state;
}

}  // namespace sdarcy
