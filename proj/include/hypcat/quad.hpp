#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hypcat::quad {

/// Convergence targets for the adaptive integrator. The integral is accepted
/// once the accumulated error estimate drops below
/// max(abs_tol, rel_tol * |value|).
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    long max_evals = 1'000'000;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evals = 0;
};

class budget_error : public std::runtime_error {
  public:
    budget_error(const std::string& what, QuadResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadResult& partial() const { return partial_; }

  private:
    QuadResult partial_;
};

class eval_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class divergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class bracket_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Integrand = std::function<double(double)>;

/// Default tolerance; max_evals honors the HYPCAT_MAX_EVALS environment
/// variable when set.
Tolerance default_tolerance();

/// Globally adaptive Gauss-Kronrod 7/15 on a finite interval. The integrand
/// must be finite on [lo, hi].
QuadResult integrate_smooth(const Integrand& f, double lo, double hi,
                            const Tolerance& tol = default_tolerance());

/// Finite interval with an (at worst) inverse-square-root singularity at the
/// lower endpoint. Substitutes tau = lo + u^2, which turns f ~ (tau-lo)^(-1/2)
/// into a bounded integrand, then runs the smooth kernel.
QuadResult integrate_sqrt_singular_lo(const Integrand& f, double lo, double hi,
                                      const Tolerance& tol = default_tolerance());

/// Integral over [lo, inf) of an exponentially decaying integrand. Splits at
/// lo + 1: the head goes through the singular transform when singular_lo is
/// set, the tail is mapped to (0, 1] by t = split - log x. A decay probe
/// rejects integrands whose tails cannot converge.
QuadResult integrate_semi_infinite(const Integrand& f, double lo,
                                   const Tolerance& tol = default_tolerance(),
                                   bool singular_lo = false);

/// Bisection on a bracketed sign change; unconditionally safe for the simple
/// zeros handled here. Throws bracket_error when f(lo) and f(hi) agree in sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol = 1e-8, int max_iter = 200);

}  // namespace hypcat::quad
