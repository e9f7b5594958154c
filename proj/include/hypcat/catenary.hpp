#pragma once

#include "hypcat/quad.hpp"

namespace hypcat::catenary {

/// Neck parameter of the spherical catenoid C_a: the hyperbolic distance
/// between the generating catenary sigma_a and the rotation axis.
class CatenoidParam {
  public:
    explicit CatenoidParam(double a);
    double a() const { return a_; }

  private:
    double a_;
};

/// Below this neck parameter the two singular scales of the profile integrand
/// merge and quadrature accuracy degrades; results are still returned.
constexpr double kNearDegenerateThreshold = 1e-4;

struct CatenaryPoint {
    double s = 0.0;          // arc length from the neck
    double x = 0.0;          // axial coordinate
    double y = 0.0;          // distance from the axis
    double sin_theta = 1.0;  // tangent angle against the radial direction
};

/// Axial half-width of the catenary between the neck circle y = a and the
/// circle y = t: the profile integral with inverse-square-root behavior at
/// tau = a. Strictly increasing in t.
double rho(const CatenoidParam& a, double t,
           const quad::Tolerance& tol = quad::default_tolerance());

/// Gomes function: rho(a, inf), half the distance between the asymptotic
/// planes. Satisfies 0 < varrho(a) < pi/(4 cosh a).
double varrho(const CatenoidParam& a,
              const quad::Tolerance& tol = quad::default_tolerance());

double varrho_prime(const CatenoidParam& a,
                    const quad::Tolerance& tol = quad::default_tolerance());

double varrho_second(const CatenoidParam& a,
                     const quad::Tolerance& tol = quad::default_tolerance());

/// Arc length along sigma_a from the neck to the circle y = t:
/// acosh(cosh 2t / cosh 2a) / 2.
double arclength(const CatenoidParam& a, double t);

/// Axial coordinate at arc length s (odd in s).
double x_of(const CatenoidParam& a, double s,
            const quad::Tolerance& tol = quad::default_tolerance());

/// Distance from the axis at arc length s (even in s):
/// acosh(cosh 2a cosh 2s) / 2.
double y_of(const CatenoidParam& a, double s);

/// sin of the tangent angle at height y: sinh 2a / sinh 2y, in (0, 1].
double sin_theta(const CatenoidParam& a, double y);

CatenaryPoint catenary_point(const CatenoidParam& a, double s,
                             const quad::Tolerance& tol = quad::default_tolerance());

// Partial derivatives of the arc-length chart (x(a,s), y(a,s)). x_a comes
// from differentiation under the integral sign; the rest are closed forms.
double x_s(const CatenoidParam& a, double s);
double y_s(const CatenoidParam& a, double s);
double y_a(const CatenoidParam& a, double s);
double x_a(const CatenoidParam& a, double s,
           const quad::Tolerance& tol = quad::default_tolerance());

/// d rho / da at fixed t: partial integral of the varrho_prime kernel minus
/// the boundary term. Negative on t >= a >= A3.
double drho_da(const CatenoidParam& a, double t,
               const quad::Tolerance& tol = quad::default_tolerance());

/// d^2 rho / da^2 at fixed t. Negative on 0 < a <= A4, t >= a.
double d2rho_da2(const CatenoidParam& a, double t,
                 const quad::Tolerance& tol = quad::default_tolerance());

}  // namespace hypcat::catenary
