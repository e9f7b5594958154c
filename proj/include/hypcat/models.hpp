#pragma once

#include <utility>

namespace hypcat::models {

/// Point of the Lorentzian 4-space; on the hyperboloid sheet it satisfies
/// <x,x> = -1 with x1 >= 1.
struct LorentzVec {
    double x1 = 1.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;
};

/// Point of the open unit ball.
struct BallPoint {
    double u = 0.0, v = 0.0, w = 0.0;
    double r2() const { return u * u + v * v + w * w; }
};

/// Point of the upper half space: horizontal coordinate z = zx + i zy,
/// height t > 0.
struct UpperHalfPoint {
    double zx = 0.0, zy = 0.0, t = 1.0;
};

/// Axial coordinates on the half-disk quotient: x = signed distance along the
/// rotation axis, y >= 0 = distance from it. The quotient metric is
/// ds^2 = cosh^2(y) dx^2 + dy^2.
struct WarpedPoint {
    double x = 0.0, y = 0.0;
};

double lorentz_inner(const LorentzVec& p, const LorentzVec& q);

/// True when |<p,p> + 1| <= tol and x1 >= 1 - tol.
bool on_hyperboloid(const LorentzVec& p, double tol = 1e-10);

/// (u,v,w) = (x3, x4, x2) / (1 + x1). Rejects points off the hyperboloid.
BallPoint hyperboloid_to_ball(const LorentzVec& p);

LorentzVec ball_to_hyperboloid(const BallPoint& p);

/// Isometry onto the upper half space fixed by: ball origin -> (0,0,1) and
/// the ball w-axis -> t-axis (so the helicoid axis lands on the t-axis).
UpperHalfPoint ball_to_upperhalf(const BallPoint& p);
BallPoint upperhalf_to_ball(const UpperHalfPoint& q);

/// Axial coordinates of a half-disk point: tanh x = 2u/(1+u^2+v^2),
/// sinh y = 2v/(1-u^2-v^2). Requires v >= 0 and u^2+v^2 < 1.
WarpedPoint warped_from_halfdisk(double u, double v);

/// Inverse map; lands in the open half-disk for every (x, y >= 0).
std::pair<double, double> halfdisk_from_warped(const WarpedPoint& p);

double ball_distance(const BallPoint& p, const BallPoint& q);

}  // namespace hypcat::models
