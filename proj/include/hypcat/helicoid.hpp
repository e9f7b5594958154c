#pragma once

#include <optional>

#include "hypcat/models.hpp"

namespace hypcat::helicoid {

/// Pitch of the helicoid H_abar: rotation angle per unit hyperbolic
/// translation along the axis. abar = 0 is a totally geodesic plane.
class HelicoidPitch {
  public:
    explicit HelicoidPitch(double abar);
    double abar() const { return abar_; }

  private:
    double abar_;
};

/// Conjugate catenoid of a helicoid. Plane covers abar = 0 (no conjugate
/// rotation data); atilde is set for the spherical and hyperbolic kinds, and
/// a_ball additionally for the spherical kind (via 2 atilde = cosh 2a).
struct ConjugacyRelation {
    enum class Kind { Plane, Spherical, Hyperbolic, Parabolic };
    Kind kind = Kind::Plane;
    std::optional<double> atilde;
    std::optional<double> a_ball;
};

struct StabilityClassHelicoid {
    enum class Kind { GloballyStable, UnstableInfiniteIndex };
    Kind kind = Kind::GloballyStable;
    ConjugacyRelation conjugate;
};

/// (cosh u cosh v, cosh u sinh v, sinh u cos(abar v), sinh u sin(abar v));
/// lies on the hyperboloid exactly.
models::LorentzVec helicoid_hyperboloid(const HelicoidPitch& abar, double u, double v);

models::BallPoint helicoid_ball(const HelicoidPitch& abar, double u, double v);

/// z = e^(v + i abar v) tanh u, t = e^v sech u; the axis is the t-axis.
models::UpperHalfPoint helicoid_upperhalf(const HelicoidPitch& abar, double u, double v);

/// Pitch of the conjugate helicoid of the spherical catenoid with
/// parameter atilde > 1/2: sqrt((atilde+1/2)/(atilde-1/2)) = coth(a).
HelicoidPitch pitch_from_spherical(double atilde);

/// Hyperbolic-catenoid counterpart sqrt((atilde-1/2)/(atilde+1/2)), in (0,1).
HelicoidPitch pitch_from_hyperbolic(double atilde);

/// Stability threshold coth(a_c).
double critical_pitch();

/// Globally stable iff abar <= coth(a_c); above that the Morse index is
/// infinite. The conjugate catenoid kind is decided by abar against 1.
StabilityClassHelicoid classify_helicoid(const HelicoidPitch& abar);

}  // namespace hypcat::helicoid
