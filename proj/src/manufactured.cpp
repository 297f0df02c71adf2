#include "sdarcy/manufactured.hpp"

#include <cmath>
#include <numbers>

namespace sdarcy {

namespace {
constexpr double pi = std::numbers::pi;
}

BoundaryData ManufacturedCase::boundary_data() const
{
    BoundaryData d;
    d.fluid_velocity = u_f;
    d.porous_flux = [u = u_p](const Vec2& x, const Vec2& n, double t) { return u(x, t).dot(n); };
    d.porous_pressure = phi_p;
    return d;
}

ManufacturedCase example51_case(const ModelParams& params)
{
    const double nu = params.nu;
    const double k1 = params.k1;
    const double k2 = params.k2;
    const double s0 = params.S0;

    // phi_p = A(x) B(y) cos t
    auto A = [](double x) { return 2.0 - pi * std::sin(pi * x); };
    auto dA = [](double x) { return -pi * pi * std::cos(pi * x); };
    auto ddA = [](double x) { return pi * pi * pi * std::sin(pi * x); };
    auto B = [](double y) { return 1.0 - y - std::cos(pi * y); };
    auto dB = [](double y) { return -1.0 + pi * std::sin(pi * y); };
    auto ddB = [](double y) { return pi * pi * std::cos(pi * y); };

    ManufacturedCase c;
    c.u_f = [A](const Vec2& p, double t) {
        const double x = p.x(), y = p.y(), ym = y - 1.0;
        return Vec2((x * x * ym * ym + y) * std::cos(t), (-2.0 / 3.0 * x * ym * ym * ym + A(x)) * std::cos(t));
    };
    c.p_f = [A](const Vec2& p, double t) { return A(p.x()) * std::sin(0.5 * pi * p.y()) * std::cos(t); };
    c.phi_p = [A, B](const Vec2& p, double t) { return A(p.x()) * B(p.y()) * std::cos(t); };
    c.u_p = [=](const Vec2& p, double t) {
        return Vec2(-k1 * dA(p.x()) * B(p.y()) * std::cos(t), -k2 * A(p.x()) * dB(p.y()) * std::cos(t));
    };

    c.grad_u_f = [dA](const Vec2& p, double t) {
        const double x = p.x(), ym = p.y() - 1.0;
        Mat2 g;
        g(0, 0) = 2.0 * x * ym * ym;
        g(0, 1) = 2.0 * x * x * ym + 1.0;
        g(1, 0) = -2.0 / 3.0 * ym * ym * ym + dA(x);
        g(1, 1) = -2.0 * x * ym * ym;
        return (g * std::cos(t)).eval();
    };
    c.grad_phi_p = [=](const Vec2& p, double t) {
        return Vec2(dA(p.x()) * B(p.y()) * std::cos(t), A(p.x()) * dB(p.y()) * std::cos(t));
    };
    c.div_u_p = [=](const Vec2& p, double t) {
        return -(k1 * ddA(p.x()) * B(p.y()) + k2 * A(p.x()) * ddB(p.y())) * std::cos(t);
    };

    c.dt_u_f = [u = c.u_f](const Vec2& p, double t) {
        return (u(p, 0.0) * -std::sin(t)).eval();
    };
    c.dt_phi_p = [A, B](const Vec2& p, double t) { return -A(p.x()) * B(p.y()) * std::sin(t); };

    c.f_f = [=, dt = c.dt_u_f](const Vec2& p, double t) {
        const double x = p.x(), y = p.y(), ym = y - 1.0;
        const double ct = std::cos(t);
        const Vec2 lap(2.0 * ym * ym + 2.0 * x * x, ddA(x) - 4.0 * x * ym);
        const Vec2 grad_p(dA(x) * std::sin(0.5 * pi * y), A(x) * 0.5 * pi * std::cos(0.5 * pi * y));
        return (dt(p, t) + (-nu * lap + grad_p) * ct).eval();
    };
    c.f_p = [=, dt = c.dt_phi_p, div = c.div_u_p](const Vec2& p, double t) { return s0 * dt(p, t) + div(p, t); };
    return c;
}

ManufacturedCase zero_case()
{
    ManufacturedCase c;
    auto zero_vec = [](const Vec2&, double) { return Vec2::Zero().eval(); };
    auto zero = [](const Vec2&, double) { return 0.0; };
    c.u_f = zero_vec;
    c.p_f = zero;
    c.u_p = zero_vec;
    c.phi_p = zero;
    c.grad_u_f = [](const Vec2&, double) { return Mat2::Zero().eval(); };
    c.grad_phi_p = zero_vec;
    c.div_u_p = zero;
    c.dt_u_f = zero_vec;
    c.dt_phi_p = zero;
    c.f_f = zero_vec;
    c.f_p = zero;
    return c;
}

}  // namespace sdarcy
