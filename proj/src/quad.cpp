#include "hypcat/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <vector>

namespace hypcat::quad {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
constexpr double kWeightK[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
constexpr double kWeightG[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

struct Segment {
    double lo, hi;
    double value;
    double abs_value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const Integrand& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f0 = f(mid);
    double k15 = kWeightK[0] * f0;
    double g7 = kWeightG[0] * f0;
    double abssum = kWeightK[0] * std::fabs(f0);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i];
        const double fa = f(mid - dx);
        const double fb = f(mid + dx);
        k15 += kWeightK[i] * (fa + fb);
        abssum += kWeightK[i] * (std::fabs(fa) + std::fabs(fb));
        if (i % 2 == 0) g7 += kWeightG[i / 2] * (fa + fb);
    }
    k15 *= half;
    g7 *= half;
    abssum *= std::fabs(half);

    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.value = k15;
    seg.abs_value = abssum;
    seg.err = std::fabs(k15 - g7);
    if (!std::isfinite(k15) || !std::isfinite(seg.err))
        throw eval_error("non-finite integrand value on [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
    return seg;
}

bool converged(double total_err, double total_val, const Tolerance& tol) {
    return total_err <= std::max(tol.abs_tol, tol.rel_tol * std::fabs(total_val));
}

Tolerance halved(const Tolerance& tol) {
    Tolerance t = tol;
    t.abs_tol *= 0.5;
    return t;
}

}  // namespace

Tolerance default_tolerance() {
    static const long env_budget = [] {
        if (const char* s = std::getenv("HYPCAT_MAX_EVALS")) {
            const long v = std::strtol(s, nullptr, 10);
            if (v >= 100) return v;
        }
        return 1'000'000L;
    }();
    Tolerance tol;
    tol.max_evals = env_budget;
    return tol;
}

QuadResult integrate_smooth(const Integrand& f, double lo, double hi,
                            const Tolerance& tol) {
    if (!(lo <= hi)) throw std::domain_error("integrate_smooth: lo > hi");
    if (tol.abs_tol <= 0 || tol.abs_tol >= 1 || tol.rel_tol <= 0 || tol.rel_tol >= 1)
        throw std::invalid_argument("tolerances must lie in (0, 1)");
    if (tol.max_evals < 100) throw std::invalid_argument("max_evals must be >= 100");

    long evals = 15;
    Segment first = gk15(f, lo, hi);
    if (lo == hi) return {0.0, 0.0, evals};

    std::priority_queue<Segment> active;
    active.push(first);
    double total_val = first.value;
    double total_err = first.err;
    double total_abs = first.abs_value;
    // Error mass stuck on segments already at roundoff width.
    double stuck_err = 0.0;

    const double span = hi - lo;
    const double min_width =
        8.0 * std::numeric_limits<double>::epsilon() * std::max({std::fabs(lo), std::fabs(hi), span});

    while (!active.empty() && !converged(total_err + stuck_err, total_val, tol)) {
        const Segment worst = active.top();
        if (worst.hi - worst.lo < min_width) {
            active.pop();
            total_err -= worst.err;
            stuck_err += worst.err;
            continue;
        }
        if (evals + 30 > tol.max_evals) {
            QuadResult partial{total_val, total_err + stuck_err, evals};
            throw budget_error("quadrature budget exhausted (" +
                                   std::to_string(tol.max_evals) + " evals)",
                               partial);
        }
        active.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Segment left = gk15(f, worst.lo, mid);
        const Segment right = gk15(f, mid, worst.hi);
        evals += 30;
        total_val += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        active.push(left);
        active.push(right);
    }

    const double roundoff = 4.0 * std::numeric_limits<double>::epsilon() * total_abs;
    return {total_val, std::max(total_err + stuck_err, roundoff), evals};
}

QuadResult integrate_sqrt_singular_lo(const Integrand& f, double lo, double hi,
                                      const Tolerance& tol) {
    if (!(lo <= hi)) throw std::domain_error("integrate_sqrt_singular_lo: lo > hi");
    const double width = hi - lo;
    auto transformed = [&f, lo](double u) { return 2.0 * u * f(lo + u * u); };
    return integrate_smooth(transformed, 0.0, std::sqrt(width), tol);
}

QuadResult integrate_semi_infinite(const Integrand& f, double lo,
                                   const Tolerance& tol, bool singular_lo) {
    const double split = lo + 1.0;

    // Decay probe: m_k = 2^k |f(split + 2^k)| must shrink for the transformed
    // tail to be integrable. Constant or ~1/t tails fail it.
    double probe[7];
    for (int k = 0; k < 7; ++k) {
        const double t = split + std::ldexp(1.0, k);
        const double v = f(t);
        if (!std::isfinite(v)) throw eval_error("non-finite integrand value at t=" + std::to_string(t));
        probe[k] = std::ldexp(1.0, k) * std::fabs(v);
    }
    if (probe[5] + probe[6] > probe[0] + probe[1] &&
        probe[5] + probe[6] > 16 * std::numeric_limits<double>::min())
        throw divergence_error("integrand does not decay on the tail; integral diverges");

    const Tolerance part = halved(tol);
    QuadResult head = singular_lo ? integrate_sqrt_singular_lo(f, lo, split, part)
                                  : integrate_smooth(f, lo, split, part);

    Tolerance tail_tol = part;
    tail_tol.max_evals = std::max(100L, tol.max_evals - head.evals);
    auto tail_map = [&f, split](double x) { return f(split - std::log(x)) / x; };
    QuadResult tail = integrate_smooth(tail_map, 0.0, 1.0, tail_tol);

    return {head.value + tail.value, head.err_estimate + tail.err_estimate,
            head.evals + tail.evals + 7};
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw bracket_error("bisect_root: no sign change on [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hypcat::quad
