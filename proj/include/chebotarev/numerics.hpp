// Real special functions, adaptive quadrature, and root bracketing shared by
// every other module.  Everything here is pure and reentrant.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace chebotarev::numerics {

// Digamma psi(x) = Gamma'/Gamma(x) for real x > 0.
// Upward recurrence into x >= 10, then the standard asymptotic series
// psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}); good to ~1e-14 there.
inline double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("digamma: argument must be positive, got " +
                                std::to_string(x));
    }
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Coefficients B_{2k}/(2k) for k = 1..7.
    static constexpr double b[] = {
        1.0 / 12.0,    -1.0 / 120.0,   1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0,   -691.0 / 32760.0, 1.0 / 12.0,
    };
    double series = 0.0;
    double power = inv2;
    for (double coeff : b) {
        series += coeff * power;
        power *= inv2;
    }
    result += std::log(x) - 0.5 * inv - series;
    return result;
}

// The gamma-ratio majorant g(sigma, T0):
//   g(sigma, T0) = max_{|t| <= T0} [ log(sqrt(sigma^2+t^2)/(|t|+2))
//                                    - sigma/(sigma^2+t^2) ]
//                  + 1/(3 sigma^2) - log 2,
// and for T0 = +infinity the coarse closed-form majorant
//   (1/2) log(sigma^2/4 + 1) + 1/(3 sigma^2) - log 2.
inline double g_bound(double sigma, double t0) {
    if (!(sigma > 0.0)) {
        throw std::domain_error("g_bound: sigma must be positive");
    }
    const double tail = 1.0 / (3.0 * sigma * sigma) - std::log(2.0);
    if (std::isinf(t0)) {
        return 0.5 * std::log(sigma * sigma / 4.0 + 1.0) + tail;
    }
    auto core = [sigma](double t) {
        const double m2 = sigma * sigma + t * t;
        return std::log(std::sqrt(m2) / (t + 2.0)) - sigma / m2;
    };
    // Coarse grid then golden-section refinement around the best cell.
    const double step = 1e-3;
    double best_t = 0.0;
    double best = core(0.0);
    for (double t = step; t <= t0 + step / 2; t += step) {
        const double tt = std::min(t, t0);
        const double v = core(tt);
        if (v > best) {
            best = v;
            best_t = tt;
        }
    }
    double lo = std::max(0.0, best_t - step);
    double hi = std::min(t0, best_t + step);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = core(x1), f2 = core(x2);
    for (int i = 0; i < 80; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = core(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = core(x1);
        }
    }
    best = std::max(best, std::max(f1, f2));
    return best + tail;
}

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_floor = 1e-14;
    int max_depth = 40;
};

namespace detail {

// 15-point Gauss-Kronrod on [a, b] with embedded 7-point Gauss estimate.
struct GK15 {
    double value;
    double error;
};

inline GK15 gk15(const std::function<double(double)>& f, double a, double b) {
    static constexpr double xk[8] = {
        0.991455371120813, 0.949107912342759, 0.864864423359769,
        0.741531185599394, 0.586087235467691, 0.405845151377397,
        0.207784955007898, 0.0};
    static constexpr double wk[8] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250,
        0.140653259715525, 0.169004726639267, 0.190350578064785,
        0.204432940075298, 0.209482141084728};
    static constexpr double wg[4] = {
        0.129484966168870, 0.279705391489277, 0.381830050505119,
        0.417959183673469};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * xk[i];
        const double fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
        resk += wk[i] * fv;
        if (i % 2 == 1 && i < 7) resg += wg[i / 2] * fv;
    }
    resg += wg[3] * f(c);  // center point belongs to the Gauss rule too
    return {resk * h, std::abs(resk - resg) * h};
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec, double scale, int depth) {
    const GK15 r = gk15(f, a, b);
    if (r.error <= spec.rel_tol * std::max(std::abs(r.value), scale) +
                       spec.abs_floor ||
        depth >= spec.max_depth) {
        if (depth >= spec.max_depth &&
            r.error > 1e3 * (spec.rel_tol * std::abs(r.value) + spec.abs_floor)) {
            throw std::runtime_error(
                "integrate: max subdivision depth reached; best estimate " +
                std::to_string(r.value) + " +/- " + std::to_string(r.error));
        }
        return r.value;
    }
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, spec, scale, depth + 1) +
           adapt(f, m, b, spec, scale, depth + 1);
}

}  // namespace detail

// Adaptive integral of f over [a, b]; b may be +infinity, in which case the
// caller asserts eventual O(1/r^2) decay and the tail is truncated once its
// analytic bound K/R (with K estimated from samples) drops below the floor.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, const QuadratureSpec& spec = {}) {
    if (std::isinf(b)) {
        // Find R with |f| <= K/r^2 beyond it, so the tail is <= K/R.
        double upper = std::max(a + 1.0, 16.0);
        double k_est = 0.0;
        for (;;) {
            k_est = 0.0;
            for (int i = 0; i < 8; ++i) {
                const double r = upper * (1.0 + i);
                k_est = std::max(k_est, std::abs(f(r)) * r * r);
            }
            if (k_est / upper < spec.abs_floor * 1e2 || upper > 1e12) break;
            upper *= 4.0;
        }
        b = upper;
    }
    if (!(b > a)) return 0.0;
    const double scale = std::abs(detail::gk15(f, a, b).value) + spec.abs_floor;
    return detail::adapt(f, a, b, spec, scale, 0);
}

// Minimal x in [lo, hi] with F(x) > 0, to absolute tolerance tol, assuming F
// is eventually positive and increasing past its last sign change.
inline double bisect_min_root(const std::function<double(double)>& F,
                              double lo, double hi, double tol) {
    if (!(F(hi) > 0.0)) {
        throw std::runtime_error(
            "bisect_min_root: F(hi) <= 0, no admissible value in range");
    }
    if (F(lo) > 0.0) return lo;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (F(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace chebotarev::numerics
