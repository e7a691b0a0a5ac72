#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>

#include "../vendor/doctest.h"
#include "chebotarev/kernels.hpp"
#include "chebotarev/numerics.hpp"

using namespace chebotarev;

TEST_CASE("squared-difference k at s = 1 limit") {
    const auto spec = kernels::KernelSpec::squared_difference(50.0, 2.0);
    const double lx = std::log(50.0);
    CHECK(kernels::k_eval(spec, {1.0, 0.0}).real() ==
          doctest::Approx(lx * lx).epsilon(1e-10));
    // Slightly off s = 1 agrees with the direct quotient.
    const std::complex<double> s(1.01, 0.3);
    const std::complex<double> direct =
        std::pow((std::pow(50.0, 2.0 * (s - 1.0)) - std::pow(50.0, s - 1.0)) /
                     (s - 1.0),
                 2);
    CHECK(std::abs(kernels::k_eval(spec, s) - direct) < 1e-9);
}

TEST_CASE("squared-difference k_hat support and tent shape") {
    const auto spec = kernels::KernelSpec::squared_difference(100.0, 2.0);
    const double x = 100.0;
    CHECK(kernels::k_hat(spec, x * x / 2.0) == 0.0);
    CHECK(kernels::k_hat(spec, x * x * x * x * 1.01) == 0.0);
    // Peak at u = x^{theta+1}.
    const double peak = std::pow(x, 3.0);
    CHECK(kernels::k_hat(spec, peak) ==
          doctest::Approx(std::log(x) / peak).epsilon(1e-12));
}

TEST_CASE("lower-bound k_hat trapezoid") {
    const auto spec = kernels::KernelSpec::lower_bound(100.0, 1.5);
    CHECK(kernels::k_hat(spec, 0.5) == 0.0);
    CHECK(kernels::k_hat(spec, std::sqrt(1.5)) == doctest::Approx(0.5));
    CHECK(kernels::k_hat(spec, 50.0) == 1.0);
    CHECK(kernels::k_hat(spec, 200.0) == 0.0);
}

TEST_CASE("Mellin inversion matches closed k_hat for every kernel") {
    const kernels::KernelSpec specs[] = {
        kernels::KernelSpec::squared_difference(30.0, 2.0),
        kernels::KernelSpec::squared_difference(20.0, 1.3),
        kernels::KernelSpec::gaussian(25.0),
        kernels::KernelSpec::lower_bound(40.0, 1.5),
    };
    for (const auto& spec : specs) {
        for (double u : kernels::inversion_samples(spec, 20)) {
            CHECK(std::abs(kernels::k_hat(spec, u) -
                           kernels::k_hat_numeric(spec, u)) < 1e-6);
        }
    }
}

TEST_CASE("phi_theta limits and monotonicity") {
    CHECK(kernels::phi_theta(2.0, 0.0) == doctest::Approx(0.0));
    // v -> infinity limit is (theta-1)^2.
    CHECK(kernels::phi_theta(2.0, 50.0) == doctest::Approx(1.0));
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double v = 5.0 * i / 1000.0;
        const double cur = kernels::phi_theta(1.7, v);
        CHECK(cur >= prev - 1e-14);
        prev = cur;
    }
}

TEST_CASE("phi sandwich: lower linear bound below phi_theta on [0, b]") {
    for (double theta : {1.2, 2.0, 3.5}) {
        for (double b : {0.05, 0.2, 1.0}) {
            for (int i = 0; i <= 1000; ++i) {
                const double v = b * i / 1000.0;
                CHECK(kernels::phi_lower(theta, v, b) <=
                      kernels::phi_theta(theta, v) + 1e-14);
            }
        }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(kernels::KernelSpec::squared_difference(0.5, 2.0),
                    std::domain_error);
    CHECK_THROWS_AS(kernels::KernelSpec::squared_difference(10.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(kernels::KernelSpec::lower_bound(10.0, 2.5),
                    std::domain_error);
    CHECK_THROWS_AS(kernels::phi_theta(0.9, 1.0), std::domain_error);
    CHECK_THROWS_AS(kernels::phi_lower(2.0, 2.0, 1.0), std::domain_error);
}
