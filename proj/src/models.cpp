#include "hypcat/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypcat::models {

namespace {
constexpr double kBoundaryGuard = 1e-14;  // reject 1 - r^2 below this

void require_inside_ball(double r2, const char* where) {
    if (1.0 - r2 < kBoundaryGuard)
        throw std::domain_error(std::string(where) + ": point too close to the ideal boundary");
}
}  // namespace

double lorentz_inner(const LorentzVec& p, const LorentzVec& q) {
    return -p.x1 * q.x1 + p.x2 * q.x2 + p.x3 * q.x3 + p.x4 * q.x4;
}

bool on_hyperboloid(const LorentzVec& p, double tol) {
    return std::fabs(lorentz_inner(p, p) + 1.0) <= tol && p.x1 >= 1.0 - tol;
}

BallPoint hyperboloid_to_ball(const LorentzVec& p) {
    if (!on_hyperboloid(p, 1e-8))
        throw std::domain_error("hyperboloid_to_ball: point is not on the hyperboloid");
    const double d = 1.0 + p.x1;
    return {p.x3 / d, p.x4 / d, p.x2 / d};
}

LorentzVec ball_to_hyperboloid(const BallPoint& p) {
    const double r2 = p.r2();
    require_inside_ball(r2, "ball_to_hyperboloid");
    const double d = 1.0 - r2;
    return {(1.0 + r2) / d, 2.0 * p.w / d, 2.0 * p.u / d, 2.0 * p.v / d};
}

UpperHalfPoint ball_to_upperhalf(const BallPoint& p) {
    const double r2 = p.r2();
    require_inside_ball(r2, "ball_to_upperhalf");
    // Inversion about the ball's north pole, then a reflection keeping t > 0.
    const double den = r2 - 2.0 * p.w + 1.0;
    return {2.0 * p.u / den, 2.0 * p.v / den, (1.0 - r2) / den};
}

BallPoint upperhalf_to_ball(const UpperHalfPoint& q) {
    if (!(q.t > 0)) throw std::domain_error("upperhalf_to_ball: t must be positive");
    const double s2 = q.zx * q.zx + q.zy * q.zy;
    const double den = s2 + (q.t + 1.0) * (q.t + 1.0);
    return {2.0 * q.zx / den, 2.0 * q.zy / den, (s2 + q.t * q.t - 1.0) / den};
}

WarpedPoint warped_from_halfdisk(double u, double v) {
    if (v < 0) throw std::domain_error("warped_from_halfdisk: v must be >= 0");
    const double r2 = u * u + v * v;
    if (r2 >= 1.0) throw std::domain_error("warped_from_halfdisk: point outside the unit disk");
    require_inside_ball(r2, "warped_from_halfdisk");
    return {std::atanh(2.0 * u / (1.0 + r2)), std::asinh(2.0 * v / (1.0 - r2))};
}

std::pair<double, double> halfdisk_from_warped(const WarpedPoint& p) {
    const double d = 1.0 + std::cosh(p.x) * std::cosh(p.y);
    return {std::sinh(p.x) * std::cosh(p.y) / d, std::sinh(p.y) / d};
}

double ball_distance(const BallPoint& p, const BallPoint& q) {
    const double pr2 = p.r2();
    const double qr2 = q.r2();
    require_inside_ball(pr2, "ball_distance");
    require_inside_ball(qr2, "ball_distance");
    const double du = p.u - q.u, dv = p.v - q.v, dw = p.w - q.w;
    const double d2 = du * du + dv * dv + dw * dw;
    return std::acosh(1.0 + 2.0 * d2 / ((1.0 - pr2) * (1.0 - qr2)));
}

}  // namespace hypcat::models
