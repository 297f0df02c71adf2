#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "sdarcy/assembly.hpp"

namespace sdarcy {

/// Coefficient vectors of all four discrete fields at one time level.
struct FieldState {
    double t{0.0};
    Vector u_f;    // MINI velocity
    Vector p_f;    // P1 pressure
    Vector u_p;    // RT0 mean normal velocities
    Vector phi_p;  // DG0 cell values

    static FieldState zeros(const Spaces& spaces, double t = 0.0);
};

struct TimeGrid {
    double tau{};
    int steps{};

    [[nodiscard]] double final_time() const { return tau * steps; }
    [[nodiscard]] double time(int n) const { return tau * n; }
    void validate() const;
    /// steps = round(T / tau); throws if T is not an integer multiple of tau.
    static TimeGrid from_step(double tau, double final_time);
};

struct SolverOptions {
    QuadratureOptions quad;
    double tolerance{1e-10};
    bool interface_traction_correction{true};
};

/// Darcy velocity/pressure pair.
struct DarcyFields {
    Vector u_p;
    Vector phi_p;
};

/// Stokes velocity/pressure pair.
struct StokesFields {
    Vector u_f;
    Vector p_f;
};

/// Decoupled backward-Euler stepper. Per time step the Darcy problem is
/// solved with the lagged Stokes interface trace, then the Stokes problem
/// with the fresh Darcy trace. Both matrices are time independent: they are
/// assembled, constrained, and factored once in the constructor.
///
/// Darcy unknowns [u_p; phi_p]:
///   [ A_p + P_pp        -B_p^T - G_p^T ] [u_p]   [ P_pf u_f^n + l_D                    ]
///   [ B_p + G_p          c M_p         ] [phi] = [ g0 f_p + c M_p phi^n + G_f u_f^n    ]
/// with c = g0 S0 / tau.
///
/// Stokes unknowns [u_f; p_f]:
///   [ M_f / tau + A_f + P_ff   -B_f^T ] [u_f]   [ F_f + M_f u_f^n / tau - G_f^T phi^{n+1} + P_fp u_p^{n+1} ]
///   [ B_f                       0     ] [p_f] = [ 0                                                        ]
class DecoupledScheme {
public:
    DecoupledScheme(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params, double tau,
                    const SolverOptions& options = {});

    [[nodiscard]] DarcyFields darcy_step(const FieldState& state, double t_next, const LoadVectors& loads,
                                         const BoundaryData& data) const;
    [[nodiscard]] StokesFields stokes_step(const FieldState& state, const DarcyFields& darcy_next, double t_next,
                                           const LoadVectors& loads, const BoundaryData& data) const;
    /// Loads at t_n + tau, Darcy step, then Stokes step.
    [[nodiscard]] FieldState step(const FieldState& state, const ManufacturedCase& mcase, const BoundaryData& data) const;

    /// Unconstrained block matrices (before essential elimination).
    [[nodiscard]] const SparseMatrix& darcy_matrix() const { return darcy_matrix_; }
    [[nodiscard]] const SparseMatrix& stokes_matrix() const { return stokes_matrix_; }
    /// Unconstrained right-hand sides.
    [[nodiscard]] Vector darcy_rhs(const FieldState& state, const LoadVectors& loads) const;
    [[nodiscard]] Vector stokes_rhs(const FieldState& state, const DarcyFields& darcy_next, const LoadVectors& loads) const;
    /// Essential dofs in the block numbering of each system.
    [[nodiscard]] const std::vector<Index>& darcy_essential_dofs() const { return darcy_elim_.dofs(); }
    [[nodiscard]] const std::vector<Index>& stokes_essential_dofs() const { return stokes_elim_.dofs(); }

    [[nodiscard]] const Operators& operators() const { return ops_; }
    [[nodiscard]] double tau() const { return tau_; }
    [[nodiscard]] const SolverOptions& options() const { return options_; }

private:
    const TriMesh& mesh_;
    const Spaces& spaces_;
    ModelParams params_;
    double tau_;
    SolverOptions options_;
    Operators ops_;
    SparseMatrix darcy_matrix_;
    SparseMatrix stokes_matrix_;
    EssentialElimination darcy_elim_;
    EssentialElimination stokes_elim_;
    std::unique_ptr<SparseSolver> darcy_solver_;
    std::unique_ptr<SparseSolver> stokes_solver_;
};

/// Monolithic steady coupled problem whose right-hand side is its own
/// left-hand-side forms applied to the exact fields at time t. Unknown
/// ordering [u_f; p_f; u_p; phi_p]. Requires gamma > 0.
FieldState ritz_projection(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                           const ManufacturedCase& mcase, double t, const SolverOptions& options = {});

/// Same as ritz_projection but also returns the assembled (unconstrained) matrix.
struct RitzSystem {
    SparseMatrix matrix;
    Vector rhs;
    std::vector<Index> essential;
    std::vector<double> essential_values;
    std::array<Index, 5> offsets{};
};
RitzSystem assemble_ritz_system(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                                const ManufacturedCase& mcase, double t, const SolverOptions& options = {});

/// Nodal MINI interpolant (bubble coefficients zero).
Vector interpolate_stokes_velocity(const TriMesh& mesh, const StokesVelocitySpace& space,
                                   const std::function<Vec2(const Vec2&, double)>& field, double t);

/// RT0 interpolant: mean normal component along each global edge normal.
Vector interpolate_darcy_velocity(const TriMesh& mesh, const DarcyVelocitySpace& space,
                                  const std::function<Vec2(const Vec2&, double)>& field, double t, int edge_degree = 5);

/// Initial state: u_f from the nodal interpolant, the other fields from the Ritz projection at t = 0.
FieldState initial_state(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                         const ManufacturedCase& mcase, const SolverOptions& options = {});

using StepHook = std::function<void(int step, const FieldState& state)>;

/// Thrown when a transient run fails; carries the step index.
class StepFailure : public SolverError {
public:
    StepFailure(int step, const std::string& what) : SolverError("step " + std::to_string(step) + ": " + what), step_(step) {}
    [[nodiscard]] int step() const { return step_; }

private:
    int step_;
};

/// Advances grid.steps decoupled steps from `initial`. `hook` (optional) sees every new state.
FieldState run_transient(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params, const TimeGrid& grid,
                         const ManufacturedCase& mcase, const FieldState& initial, const SolverOptions& options = {},
                         const StepHook& hook = {});

}  // namespace sdarcy
