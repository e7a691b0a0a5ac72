// The three Mellin kernel pairs used by the prime-detecting sums, and the
// weight function phi_theta with its sandwich bounds.
//
//   SquaredDifference: k(s) = ((x^{theta(s-1)} - x^{s-1})/(s-1))^2
//   Gaussian:          k(s) = x^{s^2+s}
//   LowerBound:        k(s) = (x^s - 1)(a^s - 1)/(s^2 log a)
//
// Each k_hat below is the inverse Mellin transform along Re s = 2.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "numerics.hpp"

namespace chebotarev::kernels {

enum class KernelKind { SquaredDifference, Gaussian, LowerBound };

struct KernelSpec {
    KernelKind kind = KernelKind::SquaredDifference;
    double x = 0.0;      // scale, > 1
    double theta = 0.0;  // SquaredDifference only, > 1
    double a = 0.0;      // LowerBound only, in (1, 2]

    static KernelSpec squared_difference(double x, double theta) {
        if (!(x > 1.0) || !(theta > 1.0)) {
            throw std::domain_error("KernelSpec: need x > 1 and theta > 1");
        }
        return {KernelKind::SquaredDifference, x, theta, 0.0};
    }
    static KernelSpec gaussian(double x) {
        if (!(x > 1.0)) throw std::domain_error("KernelSpec: need x > 1");
        return {KernelKind::Gaussian, x, 0.0, 0.0};
    }
    static KernelSpec lower_bound(double x, double a) {
        if (!(x > 1.0) || !(a > 1.0 && a <= 2.0)) {
            throw std::domain_error("KernelSpec: need x > 1 and a in (1,2]");
        }
        return {KernelKind::LowerBound, x, 0.0, a};
    }
};

namespace detail {

// (e^{w} - 1)/w with the removable singularity at w = 0 handled by series.
inline std::complex<double> expm1_over(std::complex<double> w) {
    if (std::abs(w) < 1e-4) {
        // 6-term Taylor expansion; error O(|w|^6) < 1e-24 at the cutoff.
        std::complex<double> sum = 1.0, term = 1.0;
        for (int n = 2; n <= 6; ++n) {
            term *= w / static_cast<double>(n);
            sum += term;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

}  // namespace detail

inline std::complex<double> k_eval(const KernelSpec& spec,
                                   std::complex<double> s) {
    const double lx = std::log(spec.x);
    switch (spec.kind) {
        case KernelKind::SquaredDifference: {
            // ((x^{theta(s-1)} - x^{s-1})/(s-1))^2; at s = 1 the limit is
            // ((theta-1) log x)^2.  Write the ratio as
            // x^{s-1} * [e^{(theta-1)(s-1)lx} - 1]/(s-1).
            const std::complex<double> u = s - 1.0;
            const std::complex<double> ratio =
                std::exp(u * lx) * detail::expm1_over(u * ((spec.theta - 1.0) * lx)) *
                ((spec.theta - 1.0) * lx);
            return ratio * ratio;
        }
        case KernelKind::Gaussian:
            return std::exp((s * s + s) * lx);
        case KernelKind::LowerBound: {
            // (x^s - 1)(a^s - 1)/(s^2 log a); at s = 0 the limit is
            // (log x)(log a)/log a = log x.
            // (x^s-1)/s * (a^s-1)/(s log a) = expm1_over(s lx) lx *
            // expm1_over(s la).
            const double la = std::log(spec.a);
            return detail::expm1_over(s * lx) * lx * detail::expm1_over(s * la);
        }
    }
    throw std::logic_error("k_eval: unreachable");
}

// Inverse Mellin transform k_hat(u) = (1/2 pi i) int k(s) u^{-s} ds.
inline double k_hat(const KernelSpec& spec, double u) {
    if (!(u > 0.0)) throw std::domain_error("k_hat: u must be positive");
    const double lx = std::log(spec.x);
    switch (spec.kind) {
        case KernelKind::SquaredDifference: {
            const double th = spec.theta;
            const double lu = std::log(u);
            if (lu >= 2.0 * lx && lu <= (th + 1.0) * lx) {
                return (lu - 2.0 * lx) / u;
            }
            if (lu > (th + 1.0) * lx && lu <= 2.0 * th * lx) {
                return (2.0 * th * lx - lu) / u;
            }
            return 0.0;
        }
        case KernelKind::Gaussian:
            // Completing the square in exp(lx s^2 + s(lx - log u)) along
            // Re s = 2 gives a pure Gaussian:
            //   k_hat(u) = (4 pi lx)^{-1/2} exp(-(log u - lx)^2/(4 lx)).
            return std::exp(-std::pow(std::log(u) - lx, 2) / (4.0 * lx)) /
                   std::sqrt(4.0 * std::numbers::pi * lx);
        case KernelKind::LowerBound: {
            const double la = std::log(spec.a);
            if (u <= 1.0) return 0.0;
            if (u < spec.a) return std::log(u) / la;
            if (u <= spec.x) return 1.0;
            if (u <= spec.a * spec.x) return std::log(spec.a * spec.x / u) / la;
            return 0.0;
        }
    }
    throw std::logic_error("k_hat: unreachable");
}

// Direct numeric inverse Mellin transform along Re s = c -- the slow
// validation path for the closed k_hat forms.  The contour sits just right
// of Re s = 1 where the kernel terms x^{a(s-1)} stay O(1); the oscillatory
// 1/t^2 tail is integrated in unit chunks (chunk-local error control) out to
// a kind-dependent truncation T, after which the integration-by-parts tail
// bound C/(omega T^2) is below 1e-7 provided log u stays >= ~0.3 away from
// the resonance points a log x (the tent corners).
inline double k_hat_numeric(const KernelSpec& spec, double u) {
    if (!(u > 1.0)) throw std::domain_error("k_hat_numeric: u must be > 1");
    const double c = 1.1;
    double T;
    switch (spec.kind) {
        case KernelKind::Gaussian: T = 16.0; break;
        case KernelKind::SquaredDifference: T = 2.0e4; break;
        default: T = 6.0e4; break;
    }
    auto f = [&](double t) {
        const std::complex<double> s(c, t);
        return (k_eval(spec, s) * std::exp(-s * std::log(u))).real();
    };
    const numerics::QuadratureSpec qspec{1e-9, 1e-13, 30};
    double total = 0.0;
    for (double t = 0.0; t < T; t += 1.0) {
        total += numerics::integrate(f, t, std::min(t + 1.0, T), qspec);
    }
    return total / std::numbers::pi;
}

// Sample points for inversion checks: n log-spaced u in (1, hi], nudged away
// from the kernel's Mellin resonance points so the truncated-tail bound of
// k_hat_numeric applies.
inline std::vector<double> inversion_samples(const KernelSpec& spec, int n) {
    const double lx = std::log(spec.x);
    std::vector<double> nodes{0.0};
    switch (spec.kind) {
        case KernelKind::SquaredDifference:
            nodes.insert(nodes.end(), {2.0 * lx, (spec.theta + 1.0) * lx,
                                       2.0 * spec.theta * lx});
            break;
        case KernelKind::LowerBound:
            nodes.insert(nodes.end(),
                         {std::log(spec.a), lx, std::log(spec.a) + lx});
            break;
        case KernelKind::Gaussian:
            break;
    }
    const double hi = spec.kind == KernelKind::LowerBound
                          ? std::log(spec.a) + lx + 2.0
                          : (spec.kind == KernelKind::Gaussian
                                 ? 2.5 * lx
                                 : 2.0 * spec.theta * lx * 1.05);
    const double lo = 0.3, gap = 0.45;
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        double lu = lo + (hi - lo) * (i + 0.5) / n;
        for (double node : nodes) {
            if (std::abs(lu - node) < gap) {
                lu = node + (lu >= node ? gap : -gap);
            }
        }
        out.push_back(std::exp(lu));
    }
    return out;
}

// phi_theta(v) = (theta-1)^2 - ((e^{-v} - e^{-theta v})/v)^2, the gain of
// k(1) - k(beta_1) over (log x)^2; phi_theta(0) = 0 by the analytic limit.
inline double phi_theta(double theta, double v) {
    if (!(theta > 1.0) || !(v >= 0.0)) {
        throw std::domain_error("phi_theta: need theta > 1 and v >= 0");
    }
    const double d = theta - 1.0;
    if (v < 1e-7) {
        // (e^{-v} - e^{-theta v})/v = d - d(1+theta)v/2 + O(v^2).
        const double r = d * (1.0 - 0.5 * (1.0 + theta) * v);
        return d * d - r * r;
    }
    const double r = (std::exp(-v) - std::exp(-theta * v)) / v;
    return d * d - r * r;
}

// Linear minorant 2 (theta-1)^2 e^{-2b} v, valid for 0 <= v <= b.
inline double phi_lower(double theta, double v, double b) {
    if (!(b > 0.0)) throw std::domain_error("phi_lower: b must be positive");
    if (v < 0.0 || v > b) {
        throw std::domain_error("phi_lower: need 0 <= v <= b");
    }
    const double d = theta - 1.0;
    return 2.0 * d * d * std::exp(-2.0 * b) * v;
}

}  // namespace chebotarev::kernels
