#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "../vendor/doctest.h"
#include "chebotarev/zerodensity.hpp"

using namespace chebotarev;

namespace {
const profiles::DegreeProfile p9(9, 2.29e7);
}

TEST_CASE("context validation") {
    CHECK_NOTHROW(zerodensity::ZeroCountContext(p9, p9.L0, 9));
    CHECK_THROWS_AS(zerodensity::ZeroCountContext(p9, p9.L0 - 1.0, 9),
                    std::domain_error);
    CHECK_THROWS_AS(zerodensity::ZeroCountContext(p9, p9.L0, 8),
                    std::domain_error);
    CHECK_THROWS_AS(zerodensity::ZeroCountContext(p9, p9.L0, 1000),
                    std::domain_error);
}

TEST_CASE("global zero count bound: structure and monotonicity") {
    zerodensity::ZeroCountContext ctx(p9, p9.L0, 9);
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    const double expected =
        (10.0 / std::numbers::pi) *
            (ctx.L + 9.0 * std::log(10.0 / two_pi_e)) +
        0.296 * (ctx.L + 9.0 * std::log(10.0)) + 3.971 * 9.0 + 3.969;
    CHECK(zerodensity::nl_upper(10.0, ctx) == doctest::Approx(expected));
    double prev = zerodensity::nl_upper(3.0, ctx);
    for (double T : {5.0, 10.0, 100.0, 1e4}) {
        const double cur = zerodensity::nl_upper(T, ctx);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("omega formula") {
    // omega(alpha) = 1/2 + (Q0/2) max{psi((2+alpha)/2) - log pi + 2/n0, 0}.
    const double om = zerodensity::omega(2.56, p9);
    const double arg = numerics::digamma((2.0 + 2.56) / 2.0) -
                       std::log(std::numbers::pi) + 2.0 / 9.0;
    CHECK(om == doctest::Approx(0.5 + 0.5 * p9.Q0 * std::max(arg, 0.0)));
    // Small alpha drives the digamma term negative: omega = 1/2 exactly.
    CHECK(zerodensity::omega(0.05, p9) == doctest::Approx(0.5));
    CHECK_THROWS_AS(zerodensity::omega(0.0, p9), std::domain_error);
}

TEST_CASE("local count bound at r = 1/L recovers the inner constant") {
    zerodensity::ZeroCountContext ctx(p9, p9.L0, 9);
    const double alpha = 1.0;
    const double v = zerodensity::n_small_upper(1.0 / ctx.L, alpha, ctx);
    CHECK(v == doctest::Approx(4.0 * (1.0 + alpha * zerodensity::omega(alpha, p9))));
}

TEST_CASE("annulus sum bound is positive and grows with r") {
    zerodensity::ZeroCountContext ctx(p9, p9.L0, 9);
    const double a = zerodensity::annulus_sum_upper(0.2, 1.0, 0, ctx);
    const double b = zerodensity::annulus_sum_upper(0.5, 1.0, 0, ctx);
    CHECK(a > 0.0);
    CHECK(b > a);
    // Substituting a positive inner count only lowers the bound.
    CHECK(zerodensity::annulus_sum_upper(0.5, 1.0, 1, ctx) < b);
}

TEST_CASE("c6 closed form against its defining integral") {
    for (const auto& p : profiles::builtin_profiles()) {
        const double closed = zerodensity::c6_const(p);
        const double integral =
            8.0 * (1.0 / std::numbers::pi + 0.148 +
                   p.Q0 * std::max(zerodensity::c6_integral_part(p), 0.0));
        CHECK(closed == doctest::Approx(integral).epsilon(1e-7));
    }
}

TEST_CASE("c13 formula") {
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    const double expected =
        1.0 / std::numbers::pi + 0.296 +
        p9.Q0 * (3.971 - std::log(two_pi_e) / std::numbers::pi) +
        3.969 / p9.L0;
    CHECK(zerodensity::c13_const(p9) == doctest::Approx(expected));
}
