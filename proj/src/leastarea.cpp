#include "hypcat/leastarea.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "hypcat/jacobi.hpp"

namespace hypcat::leastarea {

namespace {

// Shifted deficit integrand with the cancellation-prone
// sinh(2a+2t)/sqrt(D) - 1 rewritten exactly as sinh^2(2a)/(sqrt(D)(S+sqrt(D)))
// where S = sinh(2a+2t) and D = S^2 - sinh^2(2a) = sinh(4a+2t) sinh(2t).
double deficit_kernel(double a, double t) {
    const double s2a = std::sinh(2.0 * a);
    const double S = std::sinh(2.0 * a + 2.0 * t);
    const double D = std::sinh(4.0 * a + 2.0 * t) * std::sinh(2.0 * t);
    const double rt = std::sqrt(D);
    return std::sinh(a + t) * s2a * s2a / (rt * (S + rt));
}

double band_kernel(double a, double t) {
    return 4.0 * std::numbers::pi * std::sinh(a + t) * std::sinh(2.0 * a + 2.0 * t) /
           std::sqrt(std::sinh(4.0 * a + 2.0 * t) * std::sinh(2.0 * t));
}

}  // namespace

double area_deficit(const CatenoidParam& a, const quad::Tolerance& tol) {
    const double av = a.a();
    auto f = [av](double t) { return deficit_kernel(av, t); };
    return quad::integrate_semi_infinite(f, 0.0, tol, /*singular_lo=*/true).value;
}

double K_const(const quad::Tolerance& tol) {
    // Flip to y = 1 - x so the inverse-square-root endpoint sits at the lower
    // end; 1 - x^4 and 1/sqrt(.)-1 are both expanded cancellation-free.
    auto f = [](double y) {
        const double x = 1.0 - y;
        const double one_m_x4 = y * (4.0 - y * (6.0 - y * (4.0 - y)));
        const double rt = std::sqrt(one_m_x4);
        const double x2 = x * x;
        return x2 / (rt * (1.0 + rt));
    };
    return quad::integrate_sqrt_singular_lo(f, 0.0, 1.0, tol).value;
}

double a_l_const() {
    static std::once_flag flag;
    static double cached = 0.0;
    std::call_once(flag, [] { cached = std::acosh(1.0 / (1.0 - K_const())); });
    return cached;
}

double band_area(const CatenoidParam& a, double y1, const quad::Tolerance& tol) {
    const double av = a.a();
    if (!(y1 > av)) throw std::domain_error("band_area: y1 must be > a");
    auto f = [av](double t) { return band_kernel(av, t); };
    return quad::integrate_sqrt_singular_lo(f, 0.0, y1 - av, tol).value;
}

double disk_pair_area(double y1) {
    if (y1 < 0) throw std::domain_error("disk_pair_area: y1 must be >= 0");
    return 4.0 * std::numbers::pi * (std::cosh(y1) - 1.0);
}

AreaComparison compare_areas(const CatenoidParam& a, double y1) {
    AreaComparison cmp;
    cmp.a = a.a();
    cmp.y1 = y1;
    cmp.x1 = catenary::rho(a, y1);
    cmp.band_area = band_area(a, y1);
    cmp.disks_area = disk_pair_area(y1);
    cmp.band_smaller = cmp.band_area < cmp.disks_area;
    return cmp;
}

double oliveira_soret_delta() {
    const double a_c = jacobi::find_a_c();
    return std::cosh(catenary::varrho(catenary::CatenoidParam(a_c))) - 1.0;
}

}  // namespace hypcat::leastarea
