// Deuring-Heilbronn zero repulsion: the admissible constant pairs
// (c1, c2), (c1', c2'), (c1'', c2''), the exceptional-zero distance exponent
// c3, and the enlarged zero-free-box inequality check.
//
// Given an exceptional zero beta_1 of zeta_L, every other zero beta + it in
// the relevant window satisfies
//   1 - beta >= c2 log(c1 / ((1-beta_1) log d_L)) / log d_L,
// where the pair depends on which window:
//   general (all |t|):  uses B(d, infinity)
//   strip   (|t| <= 1): uses B'(d)
//   real    (t = 0):    uses B''(d)
// and c3 bounds the distance of beta_1 itself: 1 - beta_1 >= d_L^{-c3}.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numerics.hpp"
#include "optimize.hpp"
#include "profiles.hpp"

namespace chebotarev::repulsion {

// Fixed literals: the zero-free-region constant R, the exceptional-window
// constant R0, and the enlarged-box constant R1 (2 is the fallback when the
// enlarged box is not invoked).
struct GlobalConstants {
    static constexpr double R = 29.57;
    static constexpr double R0 = 20.0;
    static constexpr double R1 = 1.24;
    static constexpr double R1_fallback = 2.0;
};

struct RepulsionParams {
    double eps;    // > 0
    double sigma;  // >= 2
    double eta;    // in (0, 1]

    RepulsionParams(double e, double s, double h) : eps(e), sigma(s), eta(h) {
        if (!(eps > 0.0) || !(sigma >= 2.0) || !(eta > 0.0 && eta <= 1.0)) {
            throw std::domain_error("RepulsionParams: out of range");
        }
    }
};

enum class PairKind { General, Strip, Real };

// A = (sigma - 1 + eta)^2 and d = sqrt(sigma^2 + A).
inline std::pair<double, double> geometry(const RepulsionParams& params) {
    const double A = std::pow(params.sigma - 1.0 + params.eta, 2);
    return {A, std::sqrt(params.sigma * params.sigma + A)};
}

namespace detail {

inline double b1(double d, const profiles::DegreeProfile& p) {
    return 1.0 + 2.0 / (p.L0 * (d - 1.0)) + 2.0 / (p.L0 * d);
}

inline double b2(double d, double t0) {
    const double arg = numerics::digamma((d + 1.0) / 2.0) +
                       std::max(numerics::g_bound(d, t0),
                                numerics::g_bound(d + 1.0, t0)) -
                       2.0 * std::log(std::numbers::pi);
    return 0.5 + std::max(arg, 0.0) / (2.0 * std::log(2.0));
}

// max over x in {d, d+1} of log sqrt(x^2+1) - x/(x^2+1) + 1/(3x^2).
inline double gamma_ratio_majorant(double d) {
    auto m = [](double x) {
        return std::log(std::sqrt(x * x + 1.0)) - x / (x * x + 1.0) +
               1.0 / (3.0 * x * x);
    };
    return std::max(m(d), m(d + 1.0));
}

}  // namespace detail

// B(d, T0) = (1/(d-1)) max over delta in [0, Delta0(T0)] of
// (b1 + b2 delta)/(1 + delta).  The map is a Moebius function of delta,
// hence monotone; both endpoints are evaluated and the larger taken.
inline double b_general(double d, double t0, const profiles::DegreeProfile& p) {
    if (!(d > 1.0)) throw std::domain_error("b_general: need d > 1");
    const double b1v = detail::b1(d, p);
    const double b2v = detail::b2(d, t0);
    const double dmax = std::isinf(t0) ? INFINITY : profiles::delta0(t0, p);
    double hi;
    if (std::isinf(dmax)) {
        hi = std::max(b1v, b2v);  // endpoint values at delta = 0 and infinity
    } else {
        hi = std::max(b1v, (b1v + b2v * dmax) / (1.0 + dmax));
    }
    return hi / (d - 1.0);
}

// B'(d): the |t| <= 1 variant, via H(d).
inline double b_strip(double d, const profiles::DegreeProfile& p) {
    const double H = 0.5 * numerics::digamma((d + 1.0) / 2.0) +
                     0.5 * detail::gamma_ratio_majorant(d) -
                     (std::log(2.0) + 2.0 * std::log(std::numbers::pi)) / 2.0;
    const double arg = H + (4.0 * d - 2.0) / (d * (d - 1.0) * p.n0);
    return (1.0 + p.Q0 * std::max(arg, 0.0)) / (d - 1.0);
}

// B''(d): the real-zero (t = 0) variant.
inline double b_real(double d, const profiles::DegreeProfile& p) {
    const double arg = 0.5 * numerics::digamma((d + 1.0) / 2.0) -
                       std::log(std::numbers::pi) / 2.0 +
                       (2.0 * d - 1.0) / (d * (d - 1.0) * p.n0);
    return (0.5 + p.Q0 * std::max(arg, 0.0)) / (d - 1.0);
}

// c2 = (sigma-1)/(2(8+eps) A B_kind), c1 = eps c2 / (8(8+eps)).
inline std::pair<double, double> repulsion_pair(
    PairKind kind, const RepulsionParams& params,
    const profiles::DegreeProfile& p) {
    const auto [A, d] = geometry(params);
    double B;
    switch (kind) {
        case PairKind::General: B = b_general(d, INFINITY, p); break;
        case PairKind::Strip: B = b_strip(d, p); break;
        case PairKind::Real: B = b_real(d, p); break;
        default: throw std::logic_error("repulsion_pair: unreachable");
    }
    const double c2 =
        (params.sigma - 1.0) / (2.0 * (8.0 + params.eps) * A * B);
    const double c1 = params.eps / (8.0 * (8.0 + params.eps)) * c2;
    return {c1, c2};
}

// c3 = eta/c2'' + (log L0 - log c1'')/L0 using the real-kind pair.
inline double c3_const(const RepulsionParams& params,
                       const profiles::DegreeProfile& p) {
    const auto [c1pp, c2pp] = repulsion_pair(PairKind::Real, params, p);
    return params.eta / c2pp + (std::log(p.L0) - std::log(c1pp)) / p.L0;
}

struct RepulsionConstants {
    double c1, c2;      // general
    double c1p, c2p;    // strip
    double c1pp, c2pp;  // real
    double c3;
};

struct OptimizedRepulsion {
    RepulsionParams general, strip, real, for_c3;
    RepulsionConstants constants;
};

namespace detail {

// Round to 4 significant figures toward the safe side (+1 up, -1 down).
inline double round_sig4(double v, int direction) {
    if (v == 0.0) return 0.0;
    const double mag = std::pow(10.0, 3 - std::floor(std::log10(std::abs(v))));
    return (direction > 0 ? std::ceil(v * mag) : std::floor(v * mag)) / mag;
}

}  // namespace detail

// Maximize each c2-flavor (and minimize c3) over (eps, sigma) at fixed eta:
// 20x20 grid seed over eps in [0.1, 50], sigma in [2, 12], then Nelder-Mead.
// Safe rounding at 4 significant figures: each c2 down (with c1 recomputed
// from the rounded c2 so the exact ratio c1 = eps c2/(8(8+eps)) survives),
// c3 up.
inline OptimizedRepulsion optimize_repulsion(const profiles::DegreeProfile& p,
                                             double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::domain_error("optimize_repulsion: eta out of range");
    }
    const std::vector<std::pair<double, double>> box{{0.1, 50.0}, {2.0, 12.0}};
    const std::vector<int> grid{20, 20};

    auto clamp_params = [eta](const std::vector<double>& x) {
        return RepulsionParams(std::max(x[0], 1e-3), std::max(x[1], 2.0), eta);
    };
    auto maximize_pair = [&](PairKind kind) {
        auto obj = [&](const std::vector<double>& x) {
            if (x[0] <= 1e-3 || x[1] < 2.0) return 1e18;
            return -repulsion_pair(kind, clamp_params(x), p).second;
        };
        const auto r = optimize::grid_then_nm(obj, box, grid, 300);
        return clamp_params(r.x);
    };

    const RepulsionParams pg = maximize_pair(PairKind::General);
    const RepulsionParams ps = maximize_pair(PairKind::Strip);
    const RepulsionParams pr = maximize_pair(PairKind::Real);

    auto c3_obj = [&](const std::vector<double>& x) {
        if (x[0] <= 1e-3 || x[1] < 2.0) return 1e18;
        return c3_const(clamp_params(x), p);
    };
    const auto rc3 = optimize::grid_then_nm(c3_obj, box, grid, 300);
    const RepulsionParams pc3 = clamp_params(rc3.x);

    RepulsionConstants out{};
    auto rounded_pair = [&](PairKind kind, const RepulsionParams& params) {
        const double c2 =
            detail::round_sig4(repulsion_pair(kind, params, p).second, -1);
        return std::pair{params.eps / (8.0 * (8.0 + params.eps)) * c2, c2};
    };
    std::tie(out.c1, out.c2) = rounded_pair(PairKind::General, pg);
    std::tie(out.c1p, out.c2p) = rounded_pair(PairKind::Strip, ps);
    std::tie(out.c1pp, out.c2pp) = rounded_pair(PairKind::Real, pr);
    out.c3 = detail::round_sig4(c3_const(pc3, p), +1);
    return {pg, ps, pr, pc3, out};
}

// The enlarged zero-free-box inequality
//   (1/2)(1 - 1/sqrt 5) + r >= r R0/(R0 + r) + r R (R + r)/((R + r)^2 + r^2).
// Returns true iff it HOLDS; the box proposition needs it to FAIL at the
// claimed R (>= 1.7 for R0 = 2, >= 1.24 for R0 = 3.5).
inline bool zfr_enlarged_check(double R0, double r, double R) {
    if (!(R0 >= 2.0)) throw std::domain_error("zfr_enlarged_check: R0 < 2");
    const double lhs = 0.5 * (1.0 - 1.0 / std::sqrt(5.0)) + r;
    const double rhs = r * R0 / (R0 + r) +
                       r * R * (R + r) / (std::pow(R + r, 2) + r * r);
    return lhs >= rhs;
}

}  // namespace chebotarev::repulsion
