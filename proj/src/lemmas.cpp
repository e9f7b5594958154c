#include "hypcat/lemmas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypcat/catenary.hpp"

namespace hypcat::lemmas {

double A3_const() { return std::acosh(std::sqrt(3.0 + std::sqrt(5.0)) / 2.0); }

double A4_const() { return 0.25 * std::acosh((35.0 + std::sqrt(1241.0)) / 8.0); }

double phi_fn(double a, double t) {
    return std::sqrt(5.0) * std::cosh(a + t) - std::cosh(3.0 * a + t);
}

double psi_fn(double a, double t) {
    return 76.0 * std::sinh(2.0 * a) - 22.0 * std::sinh(2.0 * t) +
           29.0 * std::sinh(4.0 * a + 2.0 * t) + std::sinh(8.0 * a + 2.0 * t) -
           26.0 * std::sinh(6.0 * a + 4.0 * t) - 6.0 * std::sinh(10.0 * a + 4.0 * t) -
           25.0 * std::sinh(8.0 * a + 6.0 * t) + std::sinh(12.0 * a + 6.0 * t);
}

double w_fn(double a, double t) {
    return -5.0 * std::sinh(2.0 * a) + std::sinh(6.0 * a) - 7.0 * std::sinh(2.0 * a - 4.0 * t) -
           12.0 * std::sinh(2.0 * a - 2.0 * t) + 4.0 * std::sinh(2.0 * a + 2.0 * t) +
           std::sinh(2.0 * a + 4.0 * t);
}

RegionVerdict verify_region(const std::string& name,
                            const std::function<double(double, double)>& fn,
                            const Region& region, SignRequirement sign, int grid_size) {
    if (grid_size < 100)
        throw std::invalid_argument("verify_region: grid_size must be >= 100 per axis");

    // "worst" = largest value for upper-bounded signs, smallest otherwise.
    const bool upper_bounded =
        sign == SignRequirement::Negative || sign == SignRequirement::NonPositive;

    RegionVerdict verdict;
    verdict.name = name;
    verdict.grid_size = grid_size;
    verdict.worst_value = upper_bounded ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity();

    for (int i = 0; i < grid_size; ++i) {
        const double a = region.a_lo + (region.a_hi - region.a_lo) * i / (grid_size - 1);
        const double t_lo = region.t_relative_to_a ? a + region.t_lo : region.t_lo;
        const double t_hi = region.t_relative_to_a ? a + region.t_hi : region.t_hi;
        for (int j = 0; j < grid_size; ++j) {
            const double t = t_lo + (t_hi - t_lo) * j / (grid_size - 1);
            const double v = fn(a, t);
            if (upper_bounded ? v > verdict.worst_value : v < verdict.worst_value) {
                verdict.worst_value = v;
                verdict.worst_point = {a, t};
            }
        }
    }

    switch (sign) {
        case SignRequirement::Negative: verdict.holds = verdict.worst_value < 0.0; break;
        case SignRequirement::NonPositive: verdict.holds = verdict.worst_value <= 0.0; break;
        case SignRequirement::Positive: verdict.holds = verdict.worst_value > 0.0; break;
        case SignRequirement::NonNegative: verdict.holds = verdict.worst_value >= 0.0; break;
    }
    return verdict;
}

RegionVerdict verify_phi_region(int grid_size) {
    // phi(A3, 0) is an exact zero of the lemma; sample one notch above A3 so
    // the corner cannot round to +1 ulp.
    const double a3 = A3_const() + 1e-12;
    RegionVerdict v = verify_region(
        "phi <= 0 on [A3, A3+5] x [0, 30]", phi_fn,
        {a3, a3 + 5.0, 0.0, 30.0, false}, SignRequirement::NonPositive, grid_size);
    v.note = "t truncated at 30: cosh(3a+t) dominates sqrt(5) cosh(a+t) for a > A3";
    return v;
}

RegionVerdict verify_psi_region(int grid_size) {
    const double a4 = A4_const();
    RegionVerdict v = verify_region(
        "psi < 0 on [1e-3, A4] x [1e-3, 30]", psi_fn,
        {1e-3, a4, 1e-3, 30.0, false}, SignRequirement::Negative, grid_size);
    v.note = "t truncated at 30: -25 sinh(8a+6t) + sinh(12a+6t) dominates for a <= A4";
    return v;
}

RegionVerdict verify_w_region(int grid_size) {
    auto slack = [](double a, double t) { return w_fn(a, t) - std::sinh(6.0 * a); };
    RegionVerdict v = verify_region(
        "w >= sinh(6a) on a in [0.05, 3], t in [a, a+30]", slack,
        {0.05, 3.0, 0.0, 30.0, true}, SignRequirement::NonNegative, grid_size);
    v.note = "t truncated at a+30: sinh(2a+4t) dominates every negative term";
    return v;
}

namespace {

// Quadrature tolerance for grid sweeps: loose enough to stay fast, tight
// enough that the sign margins (>= 1e-3 away from the boundary rows) hold.
quad::Tolerance sweep_tolerance() {
    quad::Tolerance tol = quad::default_tolerance();
    tol.abs_tol = 1e-9;
    tol.rel_tol = 1e-9;
    return tol;
}

quad::Tolerance fd_tolerance() {
    quad::Tolerance tol = quad::default_tolerance();
    tol.abs_tol = 1e-14;
    tol.rel_tol = 1e-14;
    return tol;
}

// Largest |analytic - central difference| over a coarse subsample of the
// region; step 1e-4 in a.
double fd_crosscheck_drho(bool second_order, const Region& region) {
    using catenary::CatenoidParam;
    const double h = 1e-4;
    const quad::Tolerance tight = fd_tolerance();
    double worst = 0.0;
    const int n = 5;
    for (int i = 0; i < n; ++i) {
        const double a = region.a_lo + (region.a_hi - region.a_lo) * (i + 0.5) / n;
        const double t_lo = region.t_relative_to_a ? a + region.t_lo : region.t_lo;
        const double t_hi = region.t_relative_to_a ? a + region.t_hi : region.t_hi;
        for (int j = 0; j < n; ++j) {
            const double t = t_lo + (t_hi - t_lo) * (j + 0.5) / n;
            const double rp = catenary::rho(CatenoidParam(a + h), t, tight);
            const double rm = catenary::rho(CatenoidParam(a - h), t, tight);
            double analytic, fd;
            if (second_order) {
                const double r0 = catenary::rho(CatenoidParam(a), t, tight);
                fd = (rp - 2.0 * r0 + rm) / (h * h);
                analytic = catenary::d2rho_da2(CatenoidParam(a), t, sweep_tolerance());
            } else {
                fd = (rp - rm) / (2.0 * h);
                analytic = catenary::drho_da(CatenoidParam(a), t, sweep_tolerance());
            }
            worst = std::max(worst, std::fabs(analytic - fd));
        }
    }
    return worst;
}

}  // namespace

RegionVerdict verify_drho_da_region(int grid_size) {
    const double a3 = A3_const();
    const quad::Tolerance tol = sweep_tolerance();
    auto fn = [&tol](double a, double t) {
        return catenary::drho_da(catenary::CatenoidParam(a), t, tol);
    };
    // t starts a hair above a: the boundary term is -infinity at t = a.
    const Region region{a3, a3 + 3.0, 1e-3, 30.0, true};
    RegionVerdict v = verify_region("drho/da < 0 on R3 sample", fn, region,
                                    SignRequirement::Negative, grid_size);
    v.fd_disagreement = fd_crosscheck_drho(false, region);
    v.note = "R3 sampled as a in [A3, A3+3], t in [a+1e-3, a+30]; FD step 1e-4";
    return v;
}

RegionVerdict verify_d2rho_da2_region(int grid_size) {
    const double a4 = A4_const();
    const quad::Tolerance tol = sweep_tolerance();
    auto fn = [&tol](double a, double t) {
        return catenary::d2rho_da2(catenary::CatenoidParam(a), t, tol);
    };
    const Region region{1e-3, a4, 1e-3, 30.0, true};
    RegionVerdict v = verify_region("d2rho/da2 < 0 on R4 sample", fn, region,
                                    SignRequirement::Negative, grid_size);
    v.fd_disagreement = fd_crosscheck_drho(true, region);
    v.note = "R4 sampled as a in [1e-3, A4], t in [a+1e-3, a+30]; FD step 1e-4";
    return v;
}

std::vector<RegionVerdict> verify_all(int grid_size) {
    return {verify_phi_region(grid_size), verify_psi_region(grid_size),
            verify_w_region(grid_size), verify_drho_da_region(grid_size),
            verify_d2rho_da2_region(grid_size)};
}

}  // namespace hypcat::lemmas
