#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdarcy/solver.hpp"

namespace sdarcy {

using VectorField = std::function<Vec2(const Vec2&, double)>;
using ScalarField = std::function<double(const Vec2&, double)>;
using TensorField = std::function<Mat2(const Vec2&, double)>;

// Pointwise evaluation of discrete fields on a triangle of their region.
Vec2 eval_stokes_velocity(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs, Index tri,
                          const Vec2& x);
double eval_stokes_pressure(const TriMesh& mesh, const StokesPressureSpace& space, const Vector& coeffs, Index tri,
                            const Vec2& x);
Vec2 eval_darcy_velocity(const TriMesh& mesh, const DarcyVelocitySpace& space, const Vector& coeffs, Index tri,
                         const Vec2& x);

/// L2(region) norm of (discrete - exact) by element quadrature. The region is
/// the one carrying the space. Throws std::invalid_argument if the coefficient
/// vector does not belong to the space.
double l2_error(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs, const VectorField& exact,
                double t, int degree = 6);
double l2_error(const TriMesh& mesh, const StokesPressureSpace& space, const Vector& coeffs, const ScalarField& exact,
                double t, int degree = 6);
double l2_error(const TriMesh& mesh, const DarcyVelocitySpace& space, const Vector& coeffs, const VectorField& exact,
                double t, int degree = 6);
double l2_error(const TriMesh& mesh, const DarcyPressureSpace& space, const Vector& coeffs, const ScalarField& exact,
                double t, int degree = 6);

/// |u_h - u|_{H1(fluid)}.
double h1_seminorm_error(const TriMesh& mesh, const StokesVelocitySpace& space, const Vector& coeffs,
                         const TensorField& exact_grad, double t, int degree = 6);

/// || (u_fh - u_ph) . n_f ||_{L2(Gamma)}.
double interface_jump_norm(const TriMesh& mesh, const Spaces& spaces, const FieldState& state, int edge_degree = 5);

/// Largest |b_f(u_h, q)| over the pressure basis.
double max_discrete_divergence(const SparseMatrix& b_f, const Vector& u_f);

struct TimeRule {
    enum class Kind { HSquared, Fixed };
    Kind kind{Kind::HSquared};
    double tau{0.0};          // used when kind == Fixed
    double final_time{1.0};

    /// Step for a mesh with n cells per unit length (h = 1/n).
    [[nodiscard]] TimeGrid grid(int n) const;
};

struct ConvergenceRow {
    int n{};
    double h{};             // 1/n
    double diameter{};      // max triangle diameter
    double tau{};
    int steps{};
    double err_uf_l2{};
    double err_up_l2{};
    double err_phi_l2{};
    double err_pf_l2{};
    double err_uf_h1{};
    double jump{};
    double wall_seconds{};
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;

    /// log2(e_{k-1} / e_k) for k >= 1; empty optional for the first row.
    [[nodiscard]] std::optional<double> rate(std::size_t row, double ConvergenceRow::*column) const;
};

struct StudyConfig {
    DomainSpec domain;
    ModelParams params;
    std::vector<int> subdivisions{4, 8, 16, 32};
    TimeRule time;
    SolverOptions solver;
    unsigned jobs{1};
};

/// Result of one transient run on one mesh, errors measured at the final time.
struct LevelResult {
    ConvergenceRow row;
    TriMesh mesh;
    FieldState state;
};

LevelResult run_level(const StudyConfig& config, int n, const ManufacturedCase& mcase);

class StudyFailure : public SolverError {
public:
    StudyFailure(double h, const std::string& what, ConvergenceReport partial)
        : SolverError("h=" + std::to_string(h) + ": " + what), h_(h), partial_(std::move(partial))
    {
    }
    [[nodiscard]] double h() const { return h_; }
    [[nodiscard]] const ConvergenceReport& partial() const { return partial_; }

private:
    double h_;
    ConvergenceReport partial_;
};

/// Runs every level (up to `config.jobs` concurrently) and merges the rows in
/// mesh order. Subdivisions must double from one level to the next.
/// On failure throws StudyFailure carrying the rows completed before the
/// failing level.
ConvergenceReport run_convergence_study(const StudyConfig& config, const ManufacturedCase& mcase);

/// Ritz projection errors at a fixed time on each level.
struct RitzRow {
    int n{};
    double h{};
    double err_uf_l2{};
    double err_uf_h1{};
    double err_up_l2{};
    double err_phi_l2{};
};
std::vector<RitzRow> run_ritz_study(const StudyConfig& config, const ManufacturedCase& mcase, double t = 0.0);

/// log2(a / b).
double eoc(double coarse_error, double fine_error);

}  // namespace sdarcy
