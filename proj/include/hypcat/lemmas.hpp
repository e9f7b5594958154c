#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hypcat::lemmas {

/// Zero of sqrt(5) cosh a - cosh 3a; closed form acosh(sqrt(3+sqrt5)/2).
double A3_const();

/// Quarter of acosh((35+sqrt(1241))/8); cosh(4 A4) solves 4X^2 - 35X - 1 = 0.
double A4_const();

/// phi(a,t) = sqrt(5) cosh(a+t) - cosh(3a+t); nonpositive for a >= A3, t >= 0.
double phi_fn(double a, double t);

/// Eight-term kernel of the second derivative of the Gomes function;
/// negative on [0, A4] x [0, inf).
double psi_fn(double a, double t);

/// Six-term boundary kernel; w(a,t) >= sinh(6a) > 0 for t >= a > 0.
double w_fn(double a, double t);

struct RegionVerdict {
    std::string name;
    int grid_size = 0;
    double worst_value = 0.0;
    std::pair<double, double> worst_point{0.0, 0.0};
    bool holds = false;
    /// Largest |analytic - finite difference| over the cross-check subsample;
    /// zero for closed-form inequalities.
    double fd_disagreement = 0.0;
    std::string note;
};

enum class SignRequirement { Negative, NonPositive, Positive, NonNegative };

/// Rectangle in (a, t); when t_relative_to_a is set the t-range is
/// [a + t_lo, a + t_hi] on every grid column.
struct Region {
    double a_lo, a_hi;
    double t_lo, t_hi;
    bool t_relative_to_a = false;
};

/// Samples fn on a grid_size x grid_size grid and reports the point closest
/// to violating the sign requirement. Grid evidence, not a proof.
RegionVerdict verify_region(const std::string& name,
                            const std::function<double(double, double)>& fn,
                            const Region& region, SignRequirement sign,
                            int grid_size = 200);

// Canned verdicts for the technical inequalities, at their stated regions.
// The t-ranges are truncated at a + 30; past that every kernel is dominated
// by a single hyperbolic term of fixed sign (noted in the verdict).
RegionVerdict verify_phi_region(int grid_size = 200);
RegionVerdict verify_psi_region(int grid_size = 200);
RegionVerdict verify_w_region(int grid_size = 200);
RegionVerdict verify_drho_da_region(int grid_size = 200);
RegionVerdict verify_d2rho_da2_region(int grid_size = 200);

std::vector<RegionVerdict> verify_all(int grid_size = 200);

}  // namespace hypcat::lemmas
