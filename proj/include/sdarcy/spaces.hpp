#pragma once

#include <functional>
#include <vector>

#include "sdarcy/mesh.hpp"

namespace sdarcy {

/// MINI velocity: P1 per component on fluid vertices plus one bubble per
/// component on each fluid triangle.
///
/// Dof layout: [x at fluid vertices | y at fluid vertices | x bubbles | y bubbles].
struct StokesVelocitySpace {
    std::vector<Index> vertex_dof;   // global vertex -> local fluid vertex index, -1 if not fluid
    std::vector<Index> vertices;     // local fluid vertex -> global vertex
    std::vector<Index> tri_dof;      // global triangle -> local fluid triangle index, -1 if porous
    std::vector<Index> triangles;    // local fluid triangle -> global triangle
    std::vector<Index> dirichlet;    // sorted dofs on the closure of Gamma_f

    [[nodiscard]] Index num_vertices() const { return static_cast<Index>(vertices.size()); }
    [[nodiscard]] Index num_triangles() const { return static_cast<Index>(triangles.size()); }
    [[nodiscard]] Index dim() const { return 2 * num_vertices() + 2 * num_triangles(); }
    [[nodiscard]] Index vertex_component_dof(Index local_vertex, int comp) const
    {
        return comp * num_vertices() + local_vertex;
    }
    [[nodiscard]] Index bubble_dof(Index local_tri, int comp) const
    {
        return 2 * num_vertices() + comp * num_triangles() + local_tri;
    }
    /// Eight local dofs of a fluid triangle ordered (x: v0 v1 v2 bubble, y: v0 v1 v2 bubble).
    [[nodiscard]] std::array<Index, 8> element_dofs(const TriMesh& mesh, Index tri) const;
};

/// Continuous P1 pressure on fluid vertices. No mean-value constraint.
struct StokesPressureSpace {
    std::vector<Index> vertex_dof;
    std::vector<Index> vertices;

    [[nodiscard]] Index dim() const { return static_cast<Index>(vertices.size()); }
};

/// RT0 on porous edges. Coefficients are mean normal velocities along the
/// global edge normal.
struct DarcyVelocitySpace {
    std::vector<Index> edge_dof;     // global edge -> dof, -1 if not a porous edge
    std::vector<Index> edges;        // dof -> global edge
    std::vector<Index> essential;    // sorted dofs on Gamma_p (normal-flux condition)

    [[nodiscard]] Index dim() const { return static_cast<Index>(edges.size()); }
};

/// DG0 on porous triangles.
struct DarcyPressureSpace {
    std::vector<Index> tri_dof;
    std::vector<Index> triangles;

    [[nodiscard]] Index dim() const { return static_cast<Index>(triangles.size()); }
};

struct Spaces {
    StokesVelocitySpace stokes_velocity;
    StokesPressureSpace stokes_pressure;
    DarcyVelocitySpace darcy_velocity;
    DarcyPressureSpace darcy_pressure;
};

/// Throws MeshError if a boundary edge is untagged.
Spaces build_spaces(const TriMesh& mesh);

/// Time-dependent boundary data.
struct BoundaryData {
    std::function<Vec2(const Vec2&, double)> fluid_velocity;    // u_f on Gamma_f
    std::function<double(const Vec2&, const Vec2&, double)> porous_flux;  // (x, n_p, t) -> u_p . n_p on Gamma_p
    std::function<double(const Vec2&, double)> porous_pressure; // phi_p on Gamma_p^D

    static BoundaryData homogeneous();
};

/// Nodal values of the fluid velocity data at the Dirichlet dofs (same order as `space.dirichlet`).
std::vector<double> stokes_dirichlet_values(const TriMesh& mesh, const StokesVelocitySpace& space,
                                            const BoundaryData& data, double t);

/// Mean of the outward flux data on each essential edge, converted to the
/// global-normal sign convention (same order as `space.essential`).
std::vector<double> darcy_flux_values(const TriMesh& mesh, const DarcyVelocitySpace& space,
                                      const BoundaryData& data, double t, int edge_degree = 5);

}  // namespace sdarcy
