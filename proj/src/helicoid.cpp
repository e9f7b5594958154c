#include "hypcat/helicoid.hpp"

#include <cmath>
#include <stdexcept>

#include "hypcat/jacobi.hpp"

namespace hypcat::helicoid {

HelicoidPitch::HelicoidPitch(double abar) : abar_(abar) {
    if (!(abar >= 0.0) || !std::isfinite(abar))
        throw std::domain_error("HelicoidPitch: pitch must be >= 0");
}

models::LorentzVec helicoid_hyperboloid(const HelicoidPitch& abar, double u, double v) {
    const double ab = abar.abar();
    return {std::cosh(u) * std::cosh(v), std::cosh(u) * std::sinh(v),
            std::sinh(u) * std::cos(ab * v), std::sinh(u) * std::sin(ab * v)};
}

models::BallPoint helicoid_ball(const HelicoidPitch& abar, double u, double v) {
    const double ab = abar.abar();
    const double d = 1.0 + std::cosh(u) * std::cosh(v);
    return {std::sinh(u) * std::cos(ab * v) / d, std::sinh(u) * std::sin(ab * v) / d,
            std::cosh(u) * std::sinh(v) / d};
}

models::UpperHalfPoint helicoid_upperhalf(const HelicoidPitch& abar, double u, double v) {
    const double ab = abar.abar();
    const double ev = std::exp(v);
    const double th = std::tanh(u);
    return {ev * std::cos(ab * v) * th, ev * std::sin(ab * v) * th, ev / std::cosh(u)};
}

HelicoidPitch pitch_from_spherical(double atilde) {
    if (!(atilde > 0.5))
        throw std::domain_error("pitch_from_spherical: requires atilde > 1/2");
    return HelicoidPitch(std::sqrt((atilde + 0.5) / (atilde - 0.5)));
}

HelicoidPitch pitch_from_hyperbolic(double atilde) {
    if (!(atilde > 0.5))
        throw std::domain_error("pitch_from_hyperbolic: requires atilde > 1/2");
    return HelicoidPitch(std::sqrt((atilde - 0.5) / (atilde + 0.5)));
}

double critical_pitch() { return 1.0 / std::tanh(jacobi::find_a_c()); }

StabilityClassHelicoid classify_helicoid(const HelicoidPitch& abar) {
    const double ab = abar.abar();
    StabilityClassHelicoid out;
    out.kind = ab <= critical_pitch() ? StabilityClassHelicoid::Kind::GloballyStable
                                      : StabilityClassHelicoid::Kind::UnstableInfiniteIndex;
    if (ab == 0.0) {
        out.conjugate.kind = ConjugacyRelation::Kind::Plane;
    } else if (ab < 1.0) {
        out.conjugate.kind = ConjugacyRelation::Kind::Hyperbolic;
        out.conjugate.atilde = (1.0 + ab * ab) / (2.0 * (1.0 - ab * ab));
    } else if (ab == 1.0) {
        out.conjugate.kind = ConjugacyRelation::Kind::Parabolic;
    } else {
        out.conjugate.kind = ConjugacyRelation::Kind::Spherical;
        out.conjugate.atilde = (ab * ab + 1.0) / (2.0 * (ab * ab - 1.0));
        out.conjugate.a_ball = std::atanh(1.0 / ab);  // acoth
    }
    return out;
}

}  // namespace hypcat::helicoid
