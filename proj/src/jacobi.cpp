#include "hypcat/jacobi.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hypcat/leastarea.hpp"

namespace hypcat::jacobi {

namespace {

double sqr(double v) { return v * v; }

// AT - 1 for A = cosh 2a, T = cosh 2t, cancellation-free.
double atm1(double a, double t) {
    const double sa = std::sinh(a);
    const double st = std::sinh(t);
    return 2.0 * (sa * sa * std::cosh(2.0 * t) + st * st);
}

}  // namespace

double f_coef(const CatenoidParam& a, double s) {
    const double m = atm1(a.a(), s);
    const double s2a = std::sinh(2.0 * a.a());
    return s2a * s2a * std::cosh(2.0 * s) / (m * (m + 2.0));
}

double I_integrand(const CatenoidParam& a, double t) {
    const double A = std::cosh(2.0 * a.a());
    const double T = std::cosh(2.0 * t);
    const double n = A * (3.0 - A * A) * T * T + (A * A - 1.0) * T - 2.0 * A;
    const double m = atm1(a.a(), t);  // AT - 1
    const double d = sqr(m + 2.0) * m * std::sqrt(m);
    return n / d;
}

double zeta(const CatenoidParam& a, double s) {
    const double y = catenary::y_of(a, s);
    return std::sqrt(2.0) * std::cosh(y) * catenary::y_s(a, s);
}

double zeta_closed(const CatenoidParam& a, double s) {
    return std::cosh(2.0 * a.a()) * std::sinh(2.0 * s) / std::sqrt(atm1(a.a(), s));
}

double xi(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    const double y = catenary::y_of(a, s);
    return -std::cosh(y) * tangency_residual(a, s, tol);
}

double xi_via_integral(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    const double mag = std::fabs(s);
    double integral = 0.0;
    if (mag > 0.0) {
        auto f = [&a](double t) { return I_integrand(a, t); };
        integral = quad::integrate_smooth(f, 0.0, mag, tol).value;
        if (s < 0) integral = -integral;
    }
    return f_coef(a, s) - zeta(a, s) * integral;
}

double tangency_residual(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    return catenary::x_a(a, s, tol) * catenary::y_s(a, s) -
           catenary::x_s(a, s) * catenary::y_a(a, s);
}

double E_of(const CatenoidParam& a, const quad::Tolerance& tol) {
    return catenary::varrho_prime(a, tol) / std::sqrt(2.0);
}

double E_of_integral(const CatenoidParam& a, const quad::Tolerance& tol) {
    auto f = [&a](double t) { return I_integrand(a, t); };
    return quad::integrate_semi_infinite(f, 0.0, tol).value;
}

double find_a_c() {
    static std::once_flag flag;
    static double cached = 0.0;
    std::call_once(flag, [] {
        auto fn = [](double a) { return catenary::varrho_prime(CatenoidParam(a)); };
        cached = quad::bisect_root(fn, 0.4, 0.6, 1e-8);
    });
    return cached;
}

double find_z(const CatenoidParam& a, const quad::Tolerance& tol) {
    if (E_of(a, tol) <= 0.0)
        throw std::domain_error("find_z: xi has no zero (E(a) <= 0, catenoid is stable)");

    // xi(a, 0) = 1 > 0; double the endpoint until the sign flips.
    double lo = 0.0;
    double hi = 0.5;
    while (xi(a, hi, tol) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 100.0)
            throw std::runtime_error(
                "find_z: no sign change of xi up to s = 100 (a too close to a_c?)");
    }
    auto fn = [&a, &tol](double s) { return xi(a, s, tol); };
    return quad::bisect_root(fn, lo, hi, 1e-8);
}

StabilityClassCatenoid classify_catenoid(const CatenoidParam& a) {
    StabilityClassCatenoid out;
    out.E = E_of(a);
    const double a_c = find_a_c();
    if (a.a() < a_c) {
        out.kind = StabilityClassCatenoid::Kind::UnstableIndexOne;
        out.z = find_z(a);
        out.least_area = false;
    } else {
        out.kind = StabilityClassCatenoid::Kind::GloballyStable;
        out.least_area = a.a() >= leastarea::a_l_const();
    }
    return out;
}

std::optional<std::pair<double, double>> intersect_catenaries(const CatenoidParam& a1,
                                                              const CatenoidParam& a2) {
    if (!(a1.a() < a2.a()))
        throw std::invalid_argument("intersect_catenaries: requires a1 < a2");
    if (catenary::varrho(a1) >= catenary::varrho(a2)) return std::nullopt;

    // delta is strictly increasing with delta(a2) = -rho(a1, a2) < 0 and
    // delta(inf) = varrho(a2) - varrho(a1) > 0.
    auto delta = [&](double t) { return catenary::rho(a2, t) - catenary::rho(a1, t); };
    double lo = a2.a();
    double hi = a2.a() + 0.5;
    while (delta(hi) <= 0.0) {
        lo = hi;
        hi += (hi - a2.a());
        if (hi > a2.a() + 80.0)
            throw std::runtime_error("intersect_catenaries: no bracket before t = a2 + 80");
    }
    const double t_star = quad::bisect_root(delta, lo, hi, 1e-9);
    return std::make_pair(catenary::rho(a1, t_star), t_star);
}

EnvelopePoint envelope_point(const CatenoidParam& a) {
    const double z = find_z(a);
    EnvelopePoint p;
    p.a = a.a();
    p.x = catenary::x_of(a, z);
    p.y = catenary::y_of(a, z);
    p.tangency_residual = tangency_residual(a, z);
    return p;
}

}  // namespace hypcat::jacobi
