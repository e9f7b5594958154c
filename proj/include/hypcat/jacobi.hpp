#pragma once

#include <optional>
#include <utility>

#include "hypcat/catenary.hpp"
#include "hypcat/quad.hpp"

namespace hypcat::jacobi {

using catenary::CatenoidParam;

struct StabilityClassCatenoid {
    enum class Kind { UnstableIndexOne, GloballyStable };
    Kind kind = Kind::GloballyStable;
    bool least_area = false;
    std::optional<double> z;  // present exactly for the unstable family
    double E = 0.0;
};

struct EnvelopePoint {
    double a = 0.0;
    double x = 0.0;
    double y = 0.0;
    double tangency_residual = 0.0;
};

/// f(a,s) = sinh^2(2a) cosh(2s) / (cosh^2(2a) cosh^2(2s) - 1); even, f(a,0)=1.
double f_coef(const CatenoidParam& a, double s);

/// Kernel whose integral drives the variation field: n(A,T)/d(A,T) with
/// A = cosh 2a, T = cosh 2t, n = A(3-A^2)T^2 + (A^2-1)T - 2A and
/// d = (AT+1)^2 (AT-1)^(3/2).
double I_integrand(const CatenoidParam& a, double t);

/// Vertical Jacobi field sqrt(2) cosh(y(a,s)) y_s(a,s); odd in s.
double zeta(const CatenoidParam& a, double s);

/// The displayed simplification cosh(2a) sinh(2s) / sqrt(cosh 2a cosh 2s - 1);
/// agrees with zeta pointwise (kept as an independently coded alternate).
double zeta_closed(const CatenoidParam& a, double s);

/// Variation Jacobi field, geometric form:
/// -cosh(y) (x_a y_s - x_s y_a); even in s, xi(a,0) = 1.
double xi(const CatenoidParam& a, double s,
          const quad::Tolerance& tol = quad::default_tolerance());

/// Cross-check form f(a,s) - zeta(a,s) * int_0^s I(a,t) dt.
double xi_via_integral(const CatenoidParam& a, double s,
                       const quad::Tolerance& tol = quad::default_tolerance());

/// x_a y_s - x_s y_a; vanishes exactly where the catenary touches the
/// envelope of the unstable family.
double tangency_residual(const CatenoidParam& a, double s,
                         const quad::Tolerance& tol = quad::default_tolerance());

/// Stability functional varrho'(a) / sqrt(2). Positive iff C_a is unstable.
double E_of(const CatenoidParam& a,
            const quad::Tolerance& tol = quad::default_tolerance());

/// Independent route to the same value: int_0^inf I(a,t) dt.
double E_of_integral(const CatenoidParam& a,
                     const quad::Tolerance& tol = quad::default_tolerance());

/// The critical neck parameter: unique zero of varrho' bracketed in
/// [0.4, 0.6], refined to 1e-8 and cached.
double find_a_c();

/// Unique positive zero of xi(a, .) for a < a_c, by bracket doubling from
/// s = 0.5 and bisection to 1e-8.
double find_z(const CatenoidParam& a,
              const quad::Tolerance& tol = quad::default_tolerance());

StabilityClassCatenoid classify_catenoid(const CatenoidParam& a);

/// Symmetric intersection point (x, y) of the catenaries sigma_a1, sigma_a2
/// (0 < a1 < a2); present iff varrho(a1) < varrho(a2).
std::optional<std::pair<double, double>> intersect_catenaries(
    const CatenoidParam& a1, const CatenoidParam& a2);

/// Point where sigma_a touches the envelope of the unstable family,
/// at arc length z(a).
EnvelopePoint envelope_point(const CatenoidParam& a);

}  // namespace hypcat::jacobi
