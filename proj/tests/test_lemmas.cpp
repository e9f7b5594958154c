#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypcat/lemmas.hpp"

using namespace hypcat;

TEST_CASE("A3: value and defining equation") {
    const double a3 = lemmas::A3_const();
    CHECK(a3 == doctest::Approx(0.530638).epsilon(2e-6));
    CHECK(std::fabs(std::sqrt(5.0) * std::cosh(a3) - std::cosh(3.0 * a3)) < 1e-10);
    CHECK(std::fabs(4.0 * std::cosh(a3) * std::cosh(a3) - 3.0 - std::sqrt(5.0)) < 1e-10);
}

TEST_CASE("A4: value and defining polynomial") {
    const double a4 = lemmas::A4_const();
    CHECK(a4 == doctest::Approx(0.715548).epsilon(2e-6));
    const double X = std::cosh(4.0 * a4);
    CHECK(std::fabs(4.0 * X * X - 35.0 * X - 1.0) < 1e-9);
    CHECK(lemmas::A3_const() < a4);
}

TEST_CASE("phi: boundary equality and sample signs") {
    const double a3 = lemmas::A3_const();
    CHECK(std::fabs(lemmas::phi_fn(a3, 0.0)) < 1e-9);
    CHECK(lemmas::phi_fn(0.6, 1.0) < 0.0);
    CHECK(lemmas::phi_fn(0.1, 0.0) > 0.0);

    // sign flips as a crosses A3 at t = 0
    CHECK(lemmas::phi_fn(a3 - 0.01, 0.0) > 0.0);
    CHECK(lemmas::phi_fn(a3 + 0.01, 0.0) < 0.0);
}

TEST_CASE("psi: zero at the origin, sample signs, a = 0 reduction") {
    CHECK(lemmas::psi_fn(0.0, 0.0) == 0.0);
    CHECK(lemmas::psi_fn(0.3, 1.0) < 0.0);

    const double t = 0.5;
    const double reduced =
        8.0 * std::sinh(2 * t) - 32.0 * std::sinh(4 * t) - 24.0 * std::sinh(6 * t);
    CHECK(lemmas::psi_fn(0.0, t) == doctest::Approx(reduced).epsilon(1e-13));
}

TEST_CASE("psi proof estimate 25 cosh 8a - cosh 12a changes sign past A4") {
    auto est = [](double a) { return 25.0 * std::cosh(8 * a) - std::cosh(12 * a); };
    CHECK(est(lemmas::A4_const()) > 0.0);
    CHECK(est(0.3) > 0.0);
    CHECK(est(1.5) < 0.0);
}

TEST_CASE("w: lower bound sinh(6a)") {
    for (double a : {0.1, 0.5, 1.0})
        CHECK(lemmas::w_fn(a, a) >= std::sinh(6.0 * a));
    CHECK(lemmas::w_fn(0.2, 1.0) > 0.0);
}

TEST_CASE("verify_region machinery") {
    CHECK_THROWS_AS(
        lemmas::verify_region("too coarse", [](double, double) { return -1.0; },
                              {0, 1, 0, 1, false}, lemmas::SignRequirement::Negative, 50),
        std::invalid_argument);

    const auto good = lemmas::verify_region(
        "negative everywhere", [](double a, double t) { return -1.0 - a - t; },
        {0, 1, 0, 1, false}, lemmas::SignRequirement::Negative, 100);
    CHECK(good.holds);
    CHECK(good.worst_value == doctest::Approx(-1.0));
    CHECK(good.worst_point.first == 0.0);

    const auto bad = lemmas::verify_region(
        "sign change", [](double a, double t) { return a + t - 1.0; },
        {0, 1, 0, 1, false}, lemmas::SignRequirement::Negative, 100);
    CHECK_FALSE(bad.holds);
}

TEST_CASE("canned verdicts hold at a reduced grid") {
    // the acceptance suite runs the full 200x200 grids
    CHECK(lemmas::verify_phi_region(100).holds);
    CHECK(lemmas::verify_psi_region(100).holds);
    CHECK(lemmas::verify_w_region(100).holds);
}

TEST_CASE("rho-partial verdicts with the finite-difference cross-check") {
    const auto d1 = lemmas::verify_drho_da_region(100);
    CHECK(d1.holds);
    CHECK(d1.fd_disagreement < 1e-6);
    const auto d2 = lemmas::verify_d2rho_da2_region(100);
    CHECK(d2.holds);
    CHECK(d2.fd_disagreement < 1e-4);
}
