#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <complex>
#include <numbers>
#include <random>

#include "../vendor/doctest.h"
#include "chebotarev/turan.hpp"

using namespace chebotarev;

TEST_CASE("M value: leading term alone gives 1/2") {
    turan::PowerSumInstance inst({{1.0, 0.0}}, 1.0);
    CHECK(turan::m_value(inst) == doctest::Approx(0.5));
}

TEST_CASE("single positive term witnesses at j0 = 1") {
    turan::PowerSumInstance inst({{2.0, 0.0}}, 1.0);
    const auto w = turan::turan_witness(inst);
    CHECK(w.j0 == 1);
    CHECK(w.value == doctest::Approx(2.0));
}

TEST_CASE("conjugate pair on the unit circle") {
    // z = e^{i 3 pi/4}: s_j real part 2 cos(3 pi j/4); the first j with a
    // large positive real part is j = 8 (both at +1), but the bound only
    // needs eps/(4(8+eps)); j0 comes out much earlier.
    const std::complex<double> z = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
    turan::PowerSumInstance inst({z, std::conj(z)}, 1.0);
    const auto w = turan::turan_witness(inst);
    CHECK(w.j0 >= 1);
    CHECK(w.value >= 1.0 / 36.0 - 1e-12);
}

TEST_CASE("validation rejects bad instances") {
    CHECK_THROWS_AS(turan::PowerSumInstance({}, 1.0), std::domain_error);
    CHECK_THROWS_AS(turan::PowerSumInstance({{0.0, 0.0}}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(turan::PowerSumInstance({{1.0, 0.0}, {2.0, 0.0}}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(turan::PowerSumInstance({{1.0, 0.0}}, 0.0),
                    std::domain_error);
}

TEST_CASE("seeded random instances always find a witness within the j range") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> mod(0.0, 1.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
    const double eps_choices[] = {0.1, 1.0, 5.57, 5.97};
    for (int t = 0; t < 2000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 64);
        std::vector<std::complex<double>> zs{std::polar(1.0, arg(rng))};
        for (int i = 1; i < n; ++i) zs.push_back(std::polar(mod(rng), arg(rng)));
        std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
            return std::abs(a) > std::abs(b);
        });
        const double eps = eps_choices[rng() % 4];
        turan::PowerSumInstance inst(zs, eps);
        const auto w = turan::turan_witness(inst);
        const double m = turan::m_value(inst);
        CHECK(w.j0 <= (8.0 + eps) * m + 1.0);
        CHECK(w.value >= eps / (4.0 * (8.0 + eps)) - 1e-12);
    }
}
