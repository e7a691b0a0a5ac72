// Explicit zero-counting upper bounds for Dedekind zeta functions: the
// global count N_L(T), the local count n(r;1) near s = 1, annulus sums of
// 1/|rho-1|^2, and the derived constants c6 and c13.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numerics.hpp"
#include "profiles.hpp"

namespace chebotarev::zerodensity {

struct ZeroCountContext {
    profiles::DegreeProfile profile;
    double L;  // log d_L, >= profile.L0
    int nL;    // field degree, n0 <= nL <= Q0 * L

    ZeroCountContext(profiles::DegreeProfile p, double l, int n)
        : profile(std::move(p)), L(l), nL(n) {
        if (!(L >= profile.L0 - 1e-12)) {
            throw std::domain_error("ZeroCountContext: L below profile floor");
        }
        if (nL < profile.n0 || nL > profile.Q0 * L + 1e-9) {
            throw std::domain_error("ZeroCountContext: degree outside band");
        }
    }
};

// Upper bound for N_L(T), the number of zeros with |Im rho| <= T:
// (T/pi) log(d_L (T/2 pi e)^{n_L}) + 0.296 (L + n_L log T) + 3.971 n_L + 3.969.
inline double nl_upper(double T, const ZeroCountContext& ctx) {
    if (!(T >= 1.0)) throw std::domain_error("nl_upper: T must be >= 1");
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    const double main =
        (T / std::numbers::pi) * (ctx.L + ctx.nL * std::log(T / two_pi_e));
    return main + 0.296 * (ctx.L + ctx.nL * std::log(T)) + 3.971 * ctx.nL +
           3.969;
}

// omega(alpha) = 1/2 + (Q0/2) max{psi((2+alpha)/2) - log pi + 2/n0, 0}.
inline double omega(double alpha, const profiles::DegreeProfile& p) {
    if (!(alpha > 0.0)) throw std::domain_error("omega: alpha must be > 0");
    const double arg = numerics::digamma((2.0 + alpha) / 2.0) -
                       std::log(std::numbers::pi) + 2.0 / p.n0;
    return 0.5 + 0.5 * p.Q0 * std::max(arg, 0.0);
}

// n(r;1) <= ((1+alpha)/alpha)^2 (1 + alpha r omega(alpha) L): zeros within
// distance r of s = 1.
inline double n_small_upper(double r, double alpha,
                            const ZeroCountContext& ctx) {
    if (!(r > 0.0 && r <= 1.0)) {
        throw std::domain_error("n_small_upper: need r in (0,1]");
    }
    const double ratio = (1.0 + alpha) / alpha;
    return ratio * ratio * (1.0 + alpha * r * omega(alpha, ctx.profile) * ctx.L);
}

// Annulus sum bound: sum over 1/(rL) <= |rho - 1| <= r of 1/|rho-1|^2 is at
// most (((1+alpha)/alpha)^2 (r^2 + 2 r alpha omega) - n_inner r^2) L^2, with
// n_inner the value substituted for the inner count n(1/(rL); 1).
inline double annulus_sum_upper(double r, double alpha, int n_inner,
                                const ZeroCountContext& ctx) {
    if (n_inner < 0) throw std::domain_error("annulus_sum_upper: n_inner < 0");
    if (1.0 / (r * ctx.L) > 1.0) {
        throw std::domain_error("annulus_sum_upper: inner radius exceeds 1");
    }
    const double ratio = (1.0 + alpha) / alpha;
    const double om = omega(alpha, ctx.profile);
    return (ratio * ratio * (r * r + 2.0 * r * alpha * om) -
            n_inner * r * r) *
           ctx.L * ctx.L;
}

// c6 = 8 (1/pi + 0.148 + Q0 max{0, I}) with
// I = (1 - log 2 pi e)/pi + 0.296/4 + (3.971 + 3.969/n0)/2,
// the closed form of the zero-count integrals over r^{-3}, r^{-2} weights.
inline double c6_const(const profiles::DegreeProfile& p) {
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    const double I = (1.0 - std::log(two_pi_e)) / std::numbers::pi +
                     0.296 / 4.0 + (3.971 + 3.969 / p.n0) / 2.0;
    return 8.0 * (1.0 / std::numbers::pi + 0.148 + p.Q0 * std::max(I, 0.0));
}

// Quadrature cross-check of the Q0 part of c6:
// I = int_1^inf [ (r/pi) log(r/(2 pi e)) + 0.296 log r
//                 + 3.971 + 3.969/n0 ] r^{-3} dr,
// whose three pieces integrate in closed form to (1 - log 2 pi e)/pi,
// 0.296/4, and (3.971 + 3.969/n0)/2 respectively.
inline double c6_integral_part(const profiles::DegreeProfile& p,
                               const numerics::QuadratureSpec& spec = {}) {
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    auto f = [&](double r) {
        return (r * std::log(r / two_pi_e) / std::numbers::pi +
                0.296 * std::log(r) + 3.971 + 3.969 / p.n0) /
               (r * r * r);
    };
    return numerics::integrate(f, 1.0, INFINITY, spec);
}

// c13 = 1/pi + 0.296 + Q0 (3.971 - log(2 pi e)/pi) + 3.969/L0.
inline double c13_const(const profiles::DegreeProfile& p) {
    const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
    return 1.0 / std::numbers::pi + 0.296 +
           p.Q0 * (3.971 - std::log(two_pi_e) / std::numbers::pi) +
           3.969 / p.L0;
}

}  // namespace chebotarev::zerodensity
