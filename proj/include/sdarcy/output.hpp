#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sdarcy/verification.hpp"

namespace sdarcy {

inline constexpr const char* kConvergenceHeader =
    "h,tau,err_uf_L2,rate_uf,err_up_L2,rate_up,err_phi_L2,rate_phi,wall_s";
inline constexpr const char* kRitzHeader = "h,err_uf_L2,rate_uf,err_uf_H1,rate_uf_H1,err_up_L2,rate_up,err_phi_L2,rate_phi";

/// Header plus one line per row. Rates are empty on the first row; wall_s is
/// empty when `timing` is false.
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report, bool timing = true);
/// The comment line closing a partial CSV.
void write_failure_line(std::ostream& out, double h, const std::string& reason);
void write_ritz_csv(std::ostream& out, const std::vector<RitzRow>& rows);

/// Legacy ASCII VTK unstructured grid of the whole mesh. Point data: u_f
/// (vertex values, zero off the fluid region) and p_f. Cell data: phi_p,
/// region (0 fluid, 1 porous) and the cell-averaged u_p.
void write_vtk(std::ostream& out, const TriMesh& mesh, const Spaces& spaces, const FieldState& state,
               const std::string& title = "sdarcy fields");

/// Machine-readable summary of a single run. Errors are included only when
/// `with_errors` is set.
std::string run_summary_json(const ConvergenceRow& row, double final_time, const std::string& case_name,
                             bool with_errors);

}  // namespace sdarcy
