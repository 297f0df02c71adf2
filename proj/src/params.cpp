#include "sdarcy/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sdarcy {

double ModelParams::bjs_coeff() const
{
    return alpha * nu * std::sqrt(2.0) / std::sqrt(trace_pi());
}

Eigen::Matrix2d ModelParams::k_inverse() const
{
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = 1.0 / k1;
    m(1, 1) = 1.0 / k2;
    return m;
}

void ModelParams::validate(bool allow_zero_penalty) const
{
    auto require = [](bool ok, const char* what, double value) {
        if (!ok) {
            throw std::invalid_argument(std::string("parameter out of range: ") + what + " (got " + std::to_string(value) + ")");
        }
    };
    require(nu > 0.0 && std::isfinite(nu), "nu > 0", nu);
    require(k1 > 0.0 && std::isfinite(k1), "k1 > 0", k1);
    require(k2 > 0.0 && std::isfinite(k2), "k2 > 0", k2);
    require(g0 > 0.0 && std::isfinite(g0), "g0 > 0", g0);
    require(alpha >= 0.0 && std::isfinite(alpha), "alpha >= 0", alpha);
    require(S0 >= 0.0 && std::isfinite(S0), "S0 >= 0", S0);
    if (allow_zero_penalty) {
        require(gamma >= 0.0 && std::isfinite(gamma), "gamma >= 0", gamma);
    } else {
        require(gamma > 0.0 && std::isfinite(gamma), "gamma > 0", gamma);
    }
}

}  // namespace sdarcy
