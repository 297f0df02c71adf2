#include "sdarcy/spaces.hpp"

#include <algorithm>

#include "sdarcy/fem_core.hpp"

namespace sdarcy {

std::array<Index, 8> StokesVelocitySpace::element_dofs(const TriMesh& mesh, Index tri) const
{
    const Index lt = tri_dof[static_cast<std::size_t>(tri)];
    const auto& v = mesh.triangles[static_cast<std::size_t>(tri)];
    std::array<Index, 8> dofs{};
    for (int c = 0; c < 2; ++c) {
        for (int k = 0; k < 3; ++k) {
            dofs[static_cast<std::size_t>(4 * c + k)] =
                vertex_component_dof(vertex_dof[static_cast<std::size_t>(v[static_cast<std::size_t>(k)])], c);
        }
        dofs[static_cast<std::size_t>(4 * c + 3)] = bubble_dof(lt, c);
    }
    return dofs;
}

Spaces build_spaces(const TriMesh& mesh)
{
    if (mesh.edge_tag.size() != mesh.edges.size()) {
        throw MeshError("mesh boundary has not been classified");
    }
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        if (mesh.edges[static_cast<std::size_t>(e)].tri[1] == -1 &&
            mesh.edge_tag[static_cast<std::size_t>(e)] == EdgeTag::Interior) {
            throw MeshError("untagged boundary edge " + std::to_string(e));
        }
    }

    Spaces s;
    auto& vel = s.stokes_velocity;
    vel.vertex_dof.assign(mesh.vertices.size(), -1);
    vel.tri_dof.assign(mesh.triangles.size(), -1);
    std::vector<char> fluid_vertex(mesh.vertices.size(), 0);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_region[static_cast<std::size_t>(t)] != Region::Fluid) continue;
        vel.tri_dof[static_cast<std::size_t>(t)] = vel.num_triangles();
        vel.triangles.push_back(t);
        for (Index v : mesh.triangles[static_cast<std::size_t>(t)]) fluid_vertex[static_cast<std::size_t>(v)] = 1;
    }
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        if (!fluid_vertex[static_cast<std::size_t>(v)]) continue;
        vel.vertex_dof[static_cast<std::size_t>(v)] = vel.num_vertices();
        vel.vertices.push_back(v);
    }
    std::vector<char> on_gamma_f(mesh.vertices.size(), 0);
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        if (mesh.edge_tag[static_cast<std::size_t>(e)] != EdgeTag::GammaF) continue;
        for (Index v : mesh.edges[static_cast<std::size_t>(e)].v) on_gamma_f[static_cast<std::size_t>(v)] = 1;
    }
    for (int c = 0; c < 2; ++c) {
        for (Index lv = 0; lv < vel.num_vertices(); ++lv) {
            if (on_gamma_f[static_cast<std::size_t>(vel.vertices[static_cast<std::size_t>(lv)])]) {
                vel.dirichlet.push_back(vel.vertex_component_dof(lv, c));
            }
        }
    }

    s.stokes_pressure.vertex_dof = vel.vertex_dof;
    s.stokes_pressure.vertices = vel.vertices;

    auto& dv = s.darcy_velocity;
    dv.edge_dof.assign(mesh.edges.size(), -1);
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        const bool porous = mesh.triangle_region[static_cast<std::size_t>(ed.tri[0])] == Region::Porous ||
                            (ed.tri[1] >= 0 && mesh.triangle_region[static_cast<std::size_t>(ed.tri[1])] == Region::Porous);
        if (!porous) continue;
        dv.edge_dof[static_cast<std::size_t>(e)] = dv.dim();
        dv.edges.push_back(e);
        if (mesh.edge_tag[static_cast<std::size_t>(e)] == EdgeTag::GammaP) {
            dv.essential.push_back(dv.dim() - 1);
        }
    }

    auto& dp = s.darcy_pressure;
    dp.tri_dof.assign(mesh.triangles.size(), -1);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_region[static_cast<std::size_t>(t)] != Region::Porous) continue;
        dp.tri_dof[static_cast<std::size_t>(t)] = dp.dim();
        dp.triangles.push_back(t);
    }
    return s;
}

BoundaryData BoundaryData::homogeneous()
{
    BoundaryData d;
    d.fluid_velocity = [](const Vec2&, double) { return Vec2::Zero().eval(); };
    d.porous_flux = [](const Vec2&, const Vec2&, double) { return 0.0; };
    d.porous_pressure = [](const Vec2&, double) { return 0.0; };
    return d;
}

std::vector<double> stokes_dirichlet_values(const TriMesh& mesh, const StokesVelocitySpace& space,
                                            const BoundaryData& data, double t)
{
    std::vector<double> values;
    values.reserve(space.dirichlet.size());
    const Index nv = space.num_vertices();
    for (Index dof : space.dirichlet) {
        const int comp = dof < nv ? 0 : 1;
        const Index lv = dof - comp * nv;
        const Vec2 x = mesh.vertices[static_cast<std::size_t>(space.vertices[static_cast<std::size_t>(lv)])];
        values.push_back(data.fluid_velocity(x, t)[comp]);
    }
    return values;
}

std::vector<double> darcy_flux_values(const TriMesh& mesh, const DarcyVelocitySpace& space,
                                      const BoundaryData& data, double t, int edge_degree)
{
    const auto rule = quad_edge(edge_degree);
    std::vector<double> values;
    values.reserve(space.essential.size());
    for (Index dof : space.essential) {
        const Index e = space.edges[static_cast<std::size_t>(dof)];
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        const Vec2 a = mesh.vertices[static_cast<std::size_t>(ed.v[0])];
        const Vec2 b = mesh.vertices[static_cast<std::size_t>(ed.v[1])];
        // The single adjacent triangle is porous; its outward normal is n_p.
        const auto& te = mesh.triangle_edges[static_cast<std::size_t>(ed.tri[0])];
        const int k = static_cast<int>(std::find(te.begin(), te.end(), e) - te.begin());
        const int sign = mesh.edge_sign(ed.tri[0], k);
        const Vec2 n_p = sign * mesh.edge_normal(e);
        double mean = 0.0;
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            mean += rule.weights[q] * data.porous_flux(a + rule.points[q] * (b - a), n_p, t);
        }
        values.push_back(sign * mean);
    }
    return values;
}

}  // namespace sdarcy
