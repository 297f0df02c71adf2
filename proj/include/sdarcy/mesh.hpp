#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sdarcy {

using Vec2 = Eigen::Vector2d;
using Index = std::ptrdiff_t;

class MeshError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Region { Fluid, Porous };

/// Boundary classification of an edge. `Interior` edges carry no boundary condition.
enum class EdgeTag { Interior, GammaF, GammaPD, GammaP, Interface };

enum class Side { Bottom, Right, Top, Left };

const char* to_string(EdgeTag tag);
const char* to_string(Side side);
Side side_from_string(const std::string& name);

struct Rect {
    double x0{0.0};
    double x1{1.0};
    double y0{0.0};
    double y1{1.0};

    [[nodiscard]] double width() const { return x1 - x0; }
    [[nodiscard]] double height() const { return y1 - y0; }
    [[nodiscard]] double area() const { return width() * height(); }
};

/// Two axis-aligned rectangles sharing one full edge. The porous side listed
/// in `dirichlet_porous_side` carries the pressure (natural) condition; every
/// other porous boundary edge except the interface carries a normal-flux condition.
struct DomainSpec {
    Rect fluid{0.0, 1.0, 0.0, 1.0};
    Rect porous{0.0, 1.0, 1.0, 2.0};
    Side dirichlet_porous_side{Side::Top};

    /// Side of the fluid rectangle that coincides with the interface.
    /// Throws MeshError if the rectangles do not share a full edge.
    [[nodiscard]] Side interface_side() const;
    void validate() const;
};

struct Edge {
    std::array<Index, 2> v{};      // v[0] < v[1]
    std::array<Index, 2> tri{-1, -1};  // tri[1] == -1 on the outer boundary
};

struct InterfaceEdge {
    Index edge{};
    Index fluid_tri{};
    Index porous_tri{};
    Vec2 normal;  // n_f, unit, pointing from the fluid into the porous region
};

/// Conforming two-region triangulation. Immutable after construction.
struct TriMesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<Index, 3>> triangles;          // counter-clockwise
    std::vector<Region> triangle_region;
    std::vector<std::array<Index, 3>> triangle_edges;     // local edge k is opposite local vertex k
    std::vector<Edge> edges;
    std::vector<EdgeTag> edge_tag;
    std::vector<InterfaceEdge> interface_edges;           // ordered along the interface
    double h{0.0};                                        // max triangle diameter
    int subdivisions{0};                                  // cells per unit length

    [[nodiscard]] Index num_vertices() const { return static_cast<Index>(vertices.size()); }
    [[nodiscard]] Index num_triangles() const { return static_cast<Index>(triangles.size()); }
    [[nodiscard]] Index num_edges() const { return static_cast<Index>(edges.size()); }

    [[nodiscard]] double triangle_area(Index t) const;  // signed
    [[nodiscard]] double edge_length(Index e) const;
    [[nodiscard]] Vec2 edge_midpoint(Index e) const;
    /// Global unit normal of an edge: the edge tangent v[0]->v[1] rotated clockwise.
    [[nodiscard]] Vec2 edge_normal(Index e) const;
    /// +1 if the global normal of local edge k points out of triangle t, -1 otherwise.
    [[nodiscard]] int edge_sign(Index t, int k) const;
    [[nodiscard]] Vec2 centroid(Index t) const;
    [[nodiscard]] std::array<Vec2, 3> corners(Index t) const;
};

/// Uniform right-triangle mesh of both rectangles, `n` cells per unit length,
/// every square split along its bottom-left to top-right diagonal.
TriMesh build_structured_mesh(const DomainSpec& spec, int n);

/// Assigns GammaF / GammaPD / GammaP / Interface tags to every boundary edge
/// and fills `interface_edges`. Throws MeshError if an edge remains untagged.
void classify_boundary(TriMesh& mesh, const DomainSpec& spec);

}  // namespace sdarcy
