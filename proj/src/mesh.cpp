#include "sdarcy/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace sdarcy {

namespace {

constexpr double kGeomTol = 1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kGeomTol * (1.0 + std::abs(a) + std::abs(b)); }

// Number of lattice steps of size 1/n covering `length`, or -1 if not integral.
int lattice_steps(double length, int n)
{
    const double steps = length * n;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * (1.0 + steps)) {
        return -1;
    }
    return static_cast<int>(rounded);
}

bool on_side(const Rect& r, Side side, const Vec2& p)
{
    switch (side) {
    case Side::Bottom: return close(p.y(), r.y0) && p.x() >= r.x0 - kGeomTol && p.x() <= r.x1 + kGeomTol;
    case Side::Top: return close(p.y(), r.y1) && p.x() >= r.x0 - kGeomTol && p.x() <= r.x1 + kGeomTol;
    case Side::Left: return close(p.x(), r.x0) && p.y() >= r.y0 - kGeomTol && p.y() <= r.y1 + kGeomTol;
    case Side::Right: return close(p.x(), r.x1) && p.y() >= r.y0 - kGeomTol && p.y() <= r.y1 + kGeomTol;
    }
    return false;
}

Side opposite(Side s)
{
    switch (s) {
    case Side::Bottom: return Side::Top;
    case Side::Top: return Side::Bottom;
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
    }
    return Side::Top;
}

bool inside(const Rect& r, const Vec2& p)
{
    return p.x() > r.x0 && p.x() < r.x1 && p.y() > r.y0 && p.y() < r.y1;
}

}  // namespace

const char* to_string(EdgeTag tag)
{
    switch (tag) {
    case EdgeTag::Interior: return "Interior";
    case EdgeTag::GammaF: return "GammaF";
    case EdgeTag::GammaPD: return "GammaPD";
    case EdgeTag::GammaP: return "GammaP";
    case EdgeTag::Interface: return "Interface";
    }
    return "?";
}

const char* to_string(Side side)
{
    switch (side) {
    case Side::Bottom: return "bottom";
    case Side::Right: return "right";
    case Side::Top: return "top";
    case Side::Left: return "left";
    }
    return "?";
}

Side side_from_string(const std::string& name)
{
    if (name == "bottom") return Side::Bottom;
    if (name == "right") return Side::Right;
    if (name == "top") return Side::Top;
    if (name == "left") return Side::Left;
    throw MeshError("unknown side '" + name + "' (expected bottom|right|top|left)");
}

Side DomainSpec::interface_side() const
{
    const Rect& f = fluid;
    const Rect& p = porous;
    if (close(f.x0, p.x0) && close(f.x1, p.x1)) {
        if (close(f.y1, p.y0)) return Side::Top;
        if (close(f.y0, p.y1)) return Side::Bottom;
    }
    if (close(f.y0, p.y0) && close(f.y1, p.y1)) {
        if (close(f.x1, p.x0)) return Side::Right;
        if (close(f.x0, p.x1)) return Side::Left;
    }
    throw MeshError("fluid and porous rectangles must share exactly one full edge");
}

void DomainSpec::validate() const
{
    if (!(fluid.width() > 0 && fluid.height() > 0 && porous.width() > 0 && porous.height() > 0)) {
        throw MeshError("rectangles must have positive extent");
    }
    const Side iface = interface_side();
    if (dirichlet_porous_side == opposite(iface)) {
        throw MeshError("the porous pressure side cannot be the interface");
    }
}

double TriMesh::triangle_area(Index t) const
{
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    const Vec2 a = vertices[static_cast<std::size_t>(tri[0])];
    const Vec2 b = vertices[static_cast<std::size_t>(tri[1])];
    const Vec2 c = vertices[static_cast<std::size_t>(tri[2])];
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

double TriMesh::edge_length(Index e) const
{
    const auto& ed = edges[static_cast<std::size_t>(e)];
    return (vertices[static_cast<std::size_t>(ed.v[1])] - vertices[static_cast<std::size_t>(ed.v[0])]).norm();
}

Vec2 TriMesh::edge_midpoint(Index e) const
{
    const auto& ed = edges[static_cast<std::size_t>(e)];
    return 0.5 * (vertices[static_cast<std::size_t>(ed.v[0])] + vertices[static_cast<std::size_t>(ed.v[1])]);
}

Vec2 TriMesh::edge_normal(Index e) const
{
    const auto& ed = edges[static_cast<std::size_t>(e)];
    const Vec2 d = vertices[static_cast<std::size_t>(ed.v[1])] - vertices[static_cast<std::size_t>(ed.v[0])];
    return Vec2(d.y(), -d.x()) / d.norm();
}

int TriMesh::edge_sign(Index t, int k) const
{
    const Index e = triangle_edges[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
    const Vec2 opposite_vertex = vertices[static_cast<std::size_t>(triangles[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)])];
    const Vec2 outward_probe = edge_midpoint(e) - opposite_vertex;
    return edge_normal(e).dot(outward_probe) > 0.0 ? 1 : -1;
}

Vec2 TriMesh::centroid(Index t) const
{
    const auto c = corners(t);
    return (c[0] + c[1] + c[2]) / 3.0;
}

std::array<Vec2, 3> TriMesh::corners(Index t) const
{
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    return {vertices[static_cast<std::size_t>(tri[0])], vertices[static_cast<std::size_t>(tri[1])],
            vertices[static_cast<std::size_t>(tri[2])]};
}

TriMesh build_structured_mesh(const DomainSpec& spec, int n)
{
    if (n < 2) {
        throw MeshError("subdivisions per unit length must be >= 2, got " + std::to_string(n));
    }
    spec.validate();

    const double x0 = std::min(spec.fluid.x0, spec.porous.x0);
    const double y0 = std::min(spec.fluid.y0, spec.porous.y0);
    const double x1 = std::max(spec.fluid.x1, spec.porous.x1);
    const double y1 = std::max(spec.fluid.y1, spec.porous.y1);
    const int nx = lattice_steps(x1 - x0, n);
    const int ny = lattice_steps(y1 - y0, n);
    for (const Rect* r : {&spec.fluid, &spec.porous}) {
        if (lattice_steps(r->x0 - x0, n) < 0 || lattice_steps(r->y0 - y0, n) < 0 || lattice_steps(r->width(), n) < 0 ||
            lattice_steps(r->height(), n) < 0) {
            throw MeshError("rectangle corners must lie on the 1/n lattice");
        }
    }
    if (nx < 1 || ny < 1) {
        throw MeshError("degenerate domain");
    }

    TriMesh mesh;
    mesh.subdivisions = n;
    const double dx = (x1 - x0) / nx;
    const double dy = (y1 - y0) / ny;
    mesh.vertices.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            mesh.vertices.emplace_back(x0 + i * dx, y0 + j * dy);
        }
    }
    auto vid = [nx](int i, int j) { return static_cast<Index>(j) * (nx + 1) + i; };

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Vec2 center(x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy);
            Region region;
            if (inside(spec.fluid, center)) {
                region = Region::Fluid;
            } else if (inside(spec.porous, center)) {
                region = Region::Porous;
            } else {
                throw MeshError("cell outside both subdomains; rectangles do not tile their bounding box");
            }
            const Index v00 = vid(i, j), v10 = vid(i + 1, j), v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
            mesh.triangle_region.push_back(region);
            mesh.triangle_region.push_back(region);
        }
    }

    std::map<std::pair<Index, Index>, Index> edge_index;
    mesh.triangle_edges.resize(mesh.triangles.size());
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            Index a = mesh.triangles[t][static_cast<std::size_t>((k + 1) % 3)];
            Index b = mesh.triangles[t][static_cast<std::size_t>((k + 2) % 3)];
            if (a > b) std::swap(a, b);
            auto [it, inserted] = edge_index.try_emplace({a, b}, mesh.num_edges());
            if (inserted) {
                Edge e;
                e.v = {a, b};
                e.tri = {static_cast<Index>(t), -1};
                mesh.edges.push_back(e);
            } else {
                auto& e = mesh.edges[static_cast<std::size_t>(it->second)];
                if (e.tri[1] != -1) {
                    throw MeshError("non-manifold edge");
                }
                e.tri[1] = static_cast<Index>(t);
            }
            mesh.triangle_edges[t][static_cast<std::size_t>(k)] = it->second;
        }
    }

    double h = 0.0;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_area(t) <= 0.0) {
            throw MeshError("non-positive triangle area");
        }
        const auto c = mesh.corners(t);
        h = std::max({h, (c[1] - c[0]).norm(), (c[2] - c[1]).norm(), (c[0] - c[2]).norm()});
    }
    mesh.h = h;

    classify_boundary(mesh, spec);
    return mesh;
}

void classify_boundary(TriMesh& mesh, const DomainSpec& spec)
{
    mesh.edge_tag.assign(mesh.edges.size(), EdgeTag::Interior);
    mesh.interface_edges.clear();

    for (Index e = 0; e < mesh.num_edges(); ++e) {
        const Edge& ed = mesh.edges[static_cast<std::size_t>(e)];
        const Region r0 = mesh.triangle_region[static_cast<std::size_t>(ed.tri[0])];
        EdgeTag& tag = mesh.edge_tag[static_cast<std::size_t>(e)];
        if (ed.tri[1] == -1) {
            if (r0 == Region::Fluid) {
                tag = EdgeTag::GammaF;
            } else {
                const Vec2 a = mesh.vertices[static_cast<std::size_t>(ed.v[0])];
                const Vec2 b = mesh.vertices[static_cast<std::size_t>(ed.v[1])];
                const bool pressure_side =
                    on_side(spec.porous, spec.dirichlet_porous_side, a) && on_side(spec.porous, spec.dirichlet_porous_side, b);
                tag = pressure_side ? EdgeTag::GammaPD : EdgeTag::GammaP;
            }
            continue;
        }
        const Region r1 = mesh.triangle_region[static_cast<std::size_t>(ed.tri[1])];
        if (r0 != r1) {
            tag = EdgeTag::Interface;
            InterfaceEdge ie;
            ie.edge = e;
            ie.fluid_tri = r0 == Region::Fluid ? ed.tri[0] : ed.tri[1];
            ie.porous_tri = r0 == Region::Fluid ? ed.tri[1] : ed.tri[0];
            const auto& fe = mesh.triangle_edges[static_cast<std::size_t>(ie.fluid_tri)];
            const int k = static_cast<int>(std::find(fe.begin(), fe.end(), e) - fe.begin());
            ie.normal = static_cast<double>(mesh.edge_sign(ie.fluid_tri, k)) * mesh.edge_normal(e);
            mesh.interface_edges.push_back(ie);
        }
    }

    for (Index e = 0; e < mesh.num_edges(); ++e) {
        if (mesh.edges[static_cast<std::size_t>(e)].tri[1] == -1 && mesh.edge_tag[static_cast<std::size_t>(e)] == EdgeTag::Interior) {
            throw MeshError("boundary edge " + std::to_string(e) + " left untagged");
        }
    }
    if (mesh.interface_edges.empty()) {
        throw MeshError("mesh has no interface edges");
    }

    // Order along the interface tangent.
    const Vec2 n = mesh.interface_edges.front().normal;
    const Vec2 tangent(n.y(), -n.x());
    std::stable_sort(mesh.interface_edges.begin(), mesh.interface_edges.end(),
                     [&](const InterfaceEdge& a, const InterfaceEdge& b) {
                         return tangent.dot(mesh.edge_midpoint(a.edge)) < tangent.dot(mesh.edge_midpoint(b.edge));
                     });
}

}  // namespace sdarcy
