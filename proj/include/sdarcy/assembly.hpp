#pragma once

#include "sdarcy/manufactured.hpp"
#include "sdarcy/mesh.hpp"
#include "sdarcy/params.hpp"
#include "sdarcy/sparse.hpp"
#include "sdarcy/spaces.hpp"

namespace sdarcy {

struct QuadratureOptions {
    int volume_degree{6};  // loads, error norms, MINI mass
    int edge_degree{5};
};

// All matrices use M(i, j) = form(trial basis j, test basis i). Mixed blocks
// are stored with test rows from the first-named space in the comment.

/// (u, v) on the fluid, MINI x MINI.
SparseMatrix assemble_stokes_mass(const TriMesh& mesh, const StokesVelocitySpace& vel, const QuadratureOptions& quad = {});

/// 2 nu (D(u), D(v)) + bjs_coeff <u.tau, v.tau>_Gamma.
SparseMatrix assemble_a_f(const TriMesh& mesh, const StokesVelocitySpace& vel, const ModelParams& params,
                          const QuadratureOptions& quad = {});

/// (q, div v): rows pressure (P1), columns MINI velocity.
SparseMatrix assemble_b_f(const TriMesh& mesh, const StokesVelocitySpace& vel, const StokesPressureSpace& pres,
                          const QuadratureOptions& quad = {});

/// g0 (K^{-1} u, v) on RT0.
SparseMatrix assemble_a_p(const TriMesh& mesh, const DarcyVelocitySpace& vel, const ModelParams& params,
                          const QuadratureOptions& quad = {});

/// g0 (q, div v): rows DG0, columns RT0. Exact (divergence is elementwise constant).
SparseMatrix assemble_b_p(const TriMesh& mesh, const DarcyVelocitySpace& vel, const DarcyPressureSpace& pres,
                          const ModelParams& params);

/// (phi, q) on DG0: diagonal of cell areas.
SparseMatrix assemble_darcy_mass(const TriMesh& mesh, const DarcyPressureSpace& pres);

enum class InterfaceSide { Fluid, Porous };

/// g0 <q, v.n_f>_Gamma: rows DG0, columns velocity of the selected side.
/// a_Gamma(phi, [v]) = phi^T (G_fluid v_f - G_porous v_p).
SparseMatrix assemble_a_gamma(const TriMesh& mesh, const Spaces& spaces, InterfaceSide side, const ModelParams& params,
                              const QuadratureOptions& quad = {});

/// gamma <u.n_f, v.n_f>_Gamma for each (test, trial) side pair.
struct PenaltyBlocks {
    SparseMatrix ff;
    SparseMatrix fp;  // test fluid, trial porous
    SparseMatrix pf;  // test porous, trial fluid
    SparseMatrix pp;
};
PenaltyBlocks assemble_penalty(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                               const QuadratureOptions& quad = {});

/// Every time-independent block of the coupled problem on one mesh.
struct Operators {
    SparseMatrix stokes_mass;
    SparseMatrix a_f;
    SparseMatrix b_f;
    SparseMatrix a_p;
    SparseMatrix b_p;
    SparseMatrix darcy_mass;
    SparseMatrix gamma_f;
    SparseMatrix gamma_p;
    PenaltyBlocks penalty;
};
Operators assemble_operators(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                             const QuadratureOptions& quad = {});

struct LoadVectors {
    Vector fluid_momentum;  // (f_f, v) + interface traction correction
    Vector darcy_momentum;  // -g0 <phi_D, v.n_p> on Gamma_p^D
    Vector darcy_mass;      // g0 (f_p, q)
};

/// Right-hand sides at time t. When the exact fields do not satisfy the
/// balance-of-force and BJS interface conditions exactly, the residual
/// tractions are added to the fluid momentum load so that the exact solution
/// remains a solution of the discrete equations up to discretization error.
LoadVectors assemble_loads(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                           const ManufacturedCase& mcase, const BoundaryData& data, double t,
                           const QuadratureOptions& quad = {}, bool interface_traction_correction = true);

/// Residual interface tractions of the exact fields at (x, t):
/// (normal, tangential) = (-n.T.n - g0 phi, -n.T.tau - bjs u.tau), tau = (n_y, -n_x).
Vec2 interface_traction_residual(const ManufacturedCase& mcase, const ModelParams& params, const Vec2& x,
                                 const Vec2& normal, double t);

/// Right-hand sides of the Ritz projection: the same forms as the left-hand
/// side applied to the exact fields at time t.
struct RitzRhs {
    Vector fluid_momentum;
    Vector fluid_mass;
    Vector darcy_momentum;
    Vector darcy_mass;
};
RitzRhs assemble_ritz_rhs(const TriMesh& mesh, const Spaces& spaces, const ModelParams& params,
                          const ManufacturedCase& mcase, double t, const QuadratureOptions& quad = {});

/// Local MINI basis (3 P1 + bubble) evaluated at a reference point of a triangle.
struct MiniShape {
    std::array<double, 4> value{};
    std::array<Vec2, 4> grad;  // physical gradients
};
class AffineMap;
MiniShape mini_shape(const AffineMap& map, const Vec2& ref_point);

}  // namespace sdarcy
