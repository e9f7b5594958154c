#include "hypcat/catenary.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypcat/lemmas.hpp"

namespace hypcat::catenary {

namespace {

// acosh(1 + m) evaluated from m = X - 1 directly, stable for X near 1.
double acosh1p(double m) { return std::log1p(m + std::sqrt(m * (m + 2.0))); }

// X - 1 for X = cosh(2a) cosh(2s), computed without cancellation:
// X - 1 = 2 (sinh^2 a cosh 2s + sinh^2 s).
double chart_xm1(double a, double s) {
    const double sa = std::sinh(a);
    const double ss = std::sinh(s);
    return 2.0 * (sa * sa * std::cosh(2.0 * s) + ss * ss);
}

// Shifted profile integrand: the integrand of rho(a, t) after tau = a + s,
// using sinh^2(2tau) - sinh^2(2a) = sinh(4a+2s) sinh(2s).
double profile_kernel(double a, double s) {
    return std::sinh(2.0 * a) /
           (std::cosh(a + s) * std::sqrt(std::sinh(4.0 * a + 2.0 * s) * std::sinh(2.0 * s)));
}

// Kernel of varrho'(a); inverse-square-root singular at t = 0. The 3/2 power
// is factored as sinh * sqrt(sinh * sinh) to postpone overflow.
double varrho_prime_kernel(double a, double t) {
    const double cat = std::cosh(a + t);
    const double c3at = std::cosh(3.0 * a + t);
    const double num = std::sinh(a + t) * (5.0 * cat * cat - c3at * c3at);
    const double s4 = std::sinh(4.0 * a + 2.0 * t);
    const double den = cat * cat * s4 * std::sqrt(std::sinh(2.0 * t) * s4);
    return num / den;
}

// Kernel of varrho''(a). For large arguments every sinh is scaled by
// exp(-(12a+6t)) so that intermediates stay finite; the two branches agree
// where both are representable.
double varrho_second_kernel(double a, double t) {
    const double big = 12.0 * a + 6.0 * t;
    if (big < 350.0) {
        const double cat = std::cosh(a + t);
        const double s4 = std::sinh(4.0 * a + 2.0 * t);
        const double den = 16.0 * cat * cat * cat * s4 * s4 *
                           std::sqrt(std::sinh(2.0 * t) * s4);
        return lemmas::psi_fn(a, t) / den;
    }
    const double M = big;
    auto sinh_scaled = [M](double z) {
        return 0.5 * (std::exp(z - M) - std::exp(-z - M));
    };
    const double psi_s = 76.0 * sinh_scaled(2.0 * a) - 22.0 * sinh_scaled(2.0 * t) +
                         29.0 * sinh_scaled(4.0 * a + 2.0 * t) +
                         sinh_scaled(8.0 * a + 2.0 * t) -
                         26.0 * sinh_scaled(6.0 * a + 4.0 * t) -
                         6.0 * sinh_scaled(10.0 * a + 4.0 * t) -
                         25.0 * sinh_scaled(8.0 * a + 6.0 * t) +
                         sinh_scaled(12.0 * a + 6.0 * t);
    const double e1 = std::exp(-2.0 * (a + t));
    const double e2 = std::exp(-2.0 * (4.0 * a + 2.0 * t));
    const double e3 = std::exp(-4.0 * t);
    const double corr = 0.25 * std::pow(1.0 + e1, 3.0) * (1.0 - e2) * (1.0 - e2) *
                        std::sqrt((1.0 - e3) * (1.0 - e2));
    // names: den = (corr/4) * exp(13a+9t) after regrouping the 1/4 into corr
    return psi_s * std::exp(M - (13.0 * a + 9.0 * t)) / corr;
}

// Integrand of x(a,s) without the sqrt(2) sinh(2a) prefactor:
// g = 1 / ((X+1) sqrt(X-1)), X = cosh 2a cosh 2t.
double x_kernel(double a, double t) {
    const double xm1 = chart_xm1(a, t);
    return 1.0 / ((xm1 + 2.0) * std::sqrt(xm1));
}

}  // namespace

CatenoidParam::CatenoidParam(double a) : a_(a) {
    if (!(a > 0.0) || a > 50.0 || !std::isfinite(a))
        throw std::domain_error("CatenoidParam: neck parameter must lie in (0, 50]");
}

double rho(const CatenoidParam& a, double t, const quad::Tolerance& tol) {
    const double av = a.a();
    if (t < av) throw std::domain_error("rho: t must be >= a");
    if (t == av) return 0.0;
    auto f = [av](double s) { return profile_kernel(av, s); };
    return quad::integrate_sqrt_singular_lo(f, 0.0, t - av, tol).value;
}

double varrho(const CatenoidParam& a, const quad::Tolerance& tol) {
    const double av = a.a();
    auto f = [av](double s) { return profile_kernel(av, s); };
    return quad::integrate_semi_infinite(f, 0.0, tol, /*singular_lo=*/true).value;
}

double varrho_prime(const CatenoidParam& a, const quad::Tolerance& tol) {
    const double av = a.a();
    auto f = [av](double t) { return varrho_prime_kernel(av, t); };
    return quad::integrate_semi_infinite(f, 0.0, tol, /*singular_lo=*/true).value;
}

double varrho_second(const CatenoidParam& a, const quad::Tolerance& tol) {
    const double av = a.a();
    auto f = [av](double t) { return varrho_second_kernel(av, t); };
    return quad::integrate_semi_infinite(f, 0.0, tol, /*singular_lo=*/true).value;
}

double arclength(const CatenoidParam& a, double t) {
    const double av = a.a();
    if (t < av) throw std::domain_error("arclength: t must be >= a");
    const double m = 2.0 * std::sinh(t + av) * std::sinh(t - av) / std::cosh(2.0 * av);
    return 0.5 * acosh1p(m);
}

double x_of(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    const double av = a.a();
    const double mag = std::fabs(s);
    if (mag == 0.0) return 0.0;
    auto f = [av](double t) { return x_kernel(av, t); };
    const double val =
        std::sqrt(2.0) * std::sinh(2.0 * av) * quad::integrate_smooth(f, 0.0, mag, tol).value;
    return s < 0 ? -val : val;
}

double y_of(const CatenoidParam& a, double s) {
    return 0.5 * acosh1p(chart_xm1(a.a(), s));
}

double sin_theta(const CatenoidParam& a, double y) {
    const double av = a.a();
    if (y < av) throw std::domain_error("sin_theta: y must be >= a");
    return std::sinh(2.0 * av) / std::sinh(2.0 * y);
}

CatenaryPoint catenary_point(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    CatenaryPoint p;
    p.s = s;
    p.x = x_of(a, s, tol);
    p.y = y_of(a, s);
    p.sin_theta = sin_theta(a, p.y);
    return p;
}

double x_s(const CatenoidParam& a, double s) {
    const double av = a.a();
    const double xm1 = chart_xm1(av, s);
    return std::sqrt(2.0) * std::sinh(2.0 * av) / ((xm1 + 2.0) * std::sqrt(xm1));
}

double y_s(const CatenoidParam& a, double s) {
    const double av = a.a();
    const double xm1 = chart_xm1(av, s);
    return std::cosh(2.0 * av) * std::sinh(2.0 * s) / std::sqrt(xm1 * (xm1 + 2.0));
}

double y_a(const CatenoidParam& a, double s) {
    const double av = a.a();
    const double xm1 = chart_xm1(av, s);
    return std::sinh(2.0 * av) * std::cosh(2.0 * s) / std::sqrt(xm1 * (xm1 + 2.0));
}

double x_a(const CatenoidParam& a, double s, const quad::Tolerance& tol) {
    const double av = a.a();
    const double mag = std::fabs(s);
    if (mag == 0.0) return 0.0;
    const double s2a = std::sinh(2.0 * av);
    const double c2a = std::cosh(2.0 * av);
    auto f = [av, s2a, c2a](double t) {
        const double xm1 = chart_xm1(av, t);
        const double xp1 = xm1 + 2.0;
        const double g = 1.0 / (xp1 * std::sqrt(xm1));
        const double dX = 2.0 * s2a * std::cosh(2.0 * t);
        return std::sqrt(2.0) * g * (2.0 * c2a - s2a * dX * (0.5 / xm1 + 1.0 / xp1));
    };
    const double val = quad::integrate_smooth(f, 0.0, mag, tol).value;
    return s < 0 ? -val : val;
}

double drho_da(const CatenoidParam& a, double t, const quad::Tolerance& tol) {
    const double av = a.a();
    if (t <= av) throw std::domain_error("drho_da: t must be > a");
    auto f = [av](double s) { return varrho_prime_kernel(av, s); };
    const double integral = quad::integrate_sqrt_singular_lo(f, 0.0, t - av, tol).value;
    const double boundary =
        std::sinh(2.0 * av) /
        (std::cosh(t) * std::sqrt(std::sinh(2.0 * (t + av)) * std::sinh(2.0 * (t - av))));
    return integral - boundary;
}

double d2rho_da2(const CatenoidParam& a, double t, const quad::Tolerance& tol) {
    const double av = a.a();
    if (t <= av) throw std::domain_error("d2rho_da2: t must be > a");
    auto f = [av](double s) { return varrho_second_kernel(av, s); };
    const double integral = quad::integrate_sqrt_singular_lo(f, 0.0, t - av, tol).value;
    // cosh 4t - cosh 4a = 2 sinh(2(t+a)) sinh(2(t-a))
    const double gap = 2.0 * std::sinh(2.0 * (t + av)) * std::sinh(2.0 * (t - av));
    const double ct = std::cosh(t);
    const double boundary = std::sinh(t) * lemmas::w_fn(av, t) /
                            (std::sqrt(2.0) * ct * ct * gap * std::sqrt(gap));
    return integral - boundary;
}

}  // namespace hypcat::catenary
