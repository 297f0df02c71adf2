#include "sdarcy/output.hpp"

#include <cstdio>

#include "json.hpp"

namespace sdarcy {

namespace {

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

std::string fixed(double v, const char* fmt)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string rate_cell(const std::optional<double>& r) { return r ? fixed(*r, "%.4f") : std::string{}; }

}  // namespace

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report, bool timing)
{
    out << kConvergenceHeader << '\n';
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const auto& r = report.rows[k];
        out << fixed(r.h, "%.10g") << ',' << sci(r.tau) << ',' << sci(r.err_uf_l2) << ','
            << rate_cell(report.rate(k, &ConvergenceRow::err_uf_l2)) << ',' << sci(r.err_up_l2) << ','
            << rate_cell(report.rate(k, &ConvergenceRow::err_up_l2)) << ',' << sci(r.err_phi_l2) << ','
            << rate_cell(report.rate(k, &ConvergenceRow::err_phi_l2)) << ','
            << (timing ? fixed(r.wall_seconds, "%.3f") : std::string{}) << '\n';
    }
    out.flush();
}

void write_failure_line(std::ostream& out, double h, const std::string& reason)
{
    std::string flat = reason;
    for (char& c : flat) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    out << "# FAILED at h=" << fixed(h, "%.10g") << ": " << flat << '\n';
    out.flush();
}

void write_ritz_csv(std::ostream& out, const std::vector<RitzRow>& rows)
{
    out << kRitzHeader << '\n';
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        const auto rate = [&](double RitzRow::*m) {
            return k == 0 ? std::string{} : fixed(eoc(rows[k - 1].*m, r.*m), "%.4f");
        };
        out << fixed(r.h, "%.10g") << ',' << sci(r.err_uf_l2) << ',' << rate(&RitzRow::err_uf_l2) << ','
            << sci(r.err_uf_h1) << ',' << rate(&RitzRow::err_uf_h1) << ',' << sci(r.err_up_l2) << ','
            << rate(&RitzRow::err_up_l2) << ',' << sci(r.err_phi_l2) << ',' << rate(&RitzRow::err_phi_l2) << '\n';
    }
    out.flush();
}

void write_vtk(std::ostream& out, const TriMesh& mesh, const Spaces& spaces, const FieldState& state,
               const std::string& title)
{
    const auto& vel = spaces.stokes_velocity;
    const auto& pres = spaces.stokes_pressure;
    const Index nv = mesh.num_vertices();
    const Index nt = mesh.num_triangles();

    out << "# vtk DataFile Version 2.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << nv << " double\n";
    for (const auto& v : mesh.vertices) out << sci(v.x()) << ' ' << sci(v.y()) << " 0\n";
    out << "CELLS " << nt << ' ' << 4 * nt << '\n';
    for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << "CELL_TYPES " << nt << '\n';
    for (Index t = 0; t < nt; ++t) out << "5\n";

    out << "POINT_DATA " << nv << "\nVECTORS u_f double\n";
    for (Index v = 0; v < nv; ++v) {
        const Index lv = vel.vertex_dof[static_cast<std::size_t>(v)];
        if (lv < 0) {
            out << "0 0 0\n";
        } else {
            out << sci(state.u_f[vel.vertex_component_dof(lv, 0)]) << ' ' << sci(state.u_f[vel.vertex_component_dof(lv, 1)])
                << " 0\n";
        }
    }
    out << "SCALARS p_f double 1\nLOOKUP_TABLE default\n";
    for (Index v = 0; v < nv; ++v) {
        const Index lv = pres.vertex_dof[static_cast<std::size_t>(v)];
        out << (lv < 0 ? std::string("0") : sci(state.p_f[lv])) << '\n';
    }

    out << "CELL_DATA " << nt << "\nSCALARS phi_p double 1\nLOOKUP_TABLE default\n";
    for (Index t = 0; t < nt; ++t) {
        const Index d = spaces.darcy_pressure.tri_dof[static_cast<std::size_t>(t)];
        out << (d < 0 ? std::string("0") : sci(state.phi_p[d])) << '\n';
    }
    out << "SCALARS region int 1\nLOOKUP_TABLE default\n";
    for (Index t = 0; t < nt; ++t) out << (mesh.triangle_region[static_cast<std::size_t>(t)] == Region::Porous ? 1 : 0) << '\n';
    // RT0 fields are affine per cell, so the centroid value is the cell average.
    out << "VECTORS u_p double\n";
    for (Index t = 0; t < nt; ++t) {
        if (mesh.triangle_region[static_cast<std::size_t>(t)] != Region::Porous) {
            out << "0 0 0\n";
            continue;
        }
        const Vec2 u = eval_darcy_velocity(mesh, spaces.darcy_velocity, state.u_p, t, mesh.centroid(t));
        out << sci(u.x()) << ' ' << sci(u.y()) << " 0\n";
    }
    out.flush();
}

std::string run_summary_json(const ConvergenceRow& row, double final_time, const std::string& case_name,
                             bool with_errors)
{
    nlohmann::ordered_json j;
    j["mode"] = "run";
    j["case"] = case_name;
    j["n"] = row.n;
    j["h"] = row.h;
    j["diameter"] = row.diameter;
    j["tau"] = row.tau;
    j["steps"] = row.steps;
    j["final_time"] = final_time;
    if (with_errors) {
        j["errors"] = {{"err_uf_L2", row.err_uf_l2}, {"err_up_L2", row.err_up_l2}, {"err_phi_L2", row.err_phi_l2},
                       {"err_pf_L2", row.err_pf_l2}, {"err_uf_H1", row.err_uf_h1}};
    }
    j["interface_jump"] = row.jump;
    j["wall_s"] = row.wall_seconds;
    return j.dump(2) + "\n";
}

}  // namespace sdarcy
