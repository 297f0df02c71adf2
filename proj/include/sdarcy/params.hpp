#pragma once

#include <Eigen/Core>

namespace sdarcy {

/// Physical and penalty constants. Defaults are the unit setting used by the
/// built-in manufactured case.
struct ModelParams {
    double nu{1.0};     // kinematic viscosity
    double k1{1.0};     // hydraulic conductivity, x
    double k2{1.0};     // hydraulic conductivity, y
    double g0{1.0};     // gravitational acceleration
    double alpha{1.0};  // BJS constant
    double S0{1.0};     // mass storativity
    double gamma{1.0};  // interface penalty, mesh independent

    /// trace(g0^{-1} K nu)
    [[nodiscard]] double trace_pi() const { return nu * (k1 + k2) / g0; }
    /// alpha nu sqrt(d) / sqrt(trace(Pi)) with d = 2.
    [[nodiscard]] double bjs_coeff() const;
    [[nodiscard]] Eigen::Matrix2d k_inverse() const;
    /// Throws std::invalid_argument naming the violated bound. The zero-penalty
    /// relaxation exists for uncoupled sub-solves in tests.
    void validate(bool allow_zero_penalty = false) const;
};

}  // namespace sdarcy
