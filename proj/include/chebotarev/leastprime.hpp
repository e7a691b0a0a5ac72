// The least-prime exponent machinery: structural constants (alpha3, c5, c6,
// c7, c8, c11, c13), the five case inequalities giving an admissible
// exponent B with N p <= d_L^B, the per-degree parameter optimizer, and the
// lower-bound density constant m.
//
// Case layout, by the distance of the exceptional zero beta_1 from 1
// (writing L = log d_L and using the squared-difference kernel except in the
// last case, which switches to the Gaussian kernel x^{s^2+s}):
//   non-exceptional:  no beta_1 in (1 - 1/(R0 L), 1); solve for minimal c4.
//   medium:           lambda/c4 <= (1-beta_1) L < 1/R0
//   small:            mu/(c4 L^{nu-1}) <= (1-beta_1) L <= lambda/c4
//   very small:       (kappa C1)^2/L <= (1-beta_1) L <= mu/(c4 L^{nu-1})
//   extremely small:  (1-beta_1) L < (kappa C1)^2/L; minimal c12, B = 5 c12.
// The first four give B = 2 theta c4 with c4 = 1/(2 c8) + 0.001 fixed by the
// repulsion pair at (eps1, sigma1, eta); feasibility is a positive slack.
#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kernels.hpp"
#include "numerics.hpp"
#include "profiles.hpp"
#include "repulsion.hpp"
#include "zerodensity.hpp"

namespace chebotarev::leastprime {

using profiles::DegreeProfile;
using repulsion::GlobalConstants;

enum class Case { NonExceptional, Medium, Small, VerySmall, ExtremelySmall };

struct CaseParams {
    // Per-case kernel parameters.
    double theta_ne = 12.83, alpha_ne = 2.56;
    double theta_m = 1.02, alpha_m = 5.85;
    double theta_s = 1.02, alpha_s = 0.17;
    double theta_vs = 1.029, alpha_vs = 0.67;
    // Repulsion-pair parameters for the exceptional window.
    double eps1 = 5.57, sigma1 = 4.45, eta = 0.025;
    // Second repulsion pair (evaluated at eta = 1/2) and range splitters.
    double eps2 = 5.97, sigma2 = 4.5;
    double kappa = 23.0, lambda = 0.2, mu = 0.1, nu = 1.15;

    void validate() const {
        auto need = [](bool ok, const char* what) {
            if (!ok) throw std::domain_error(std::string("CaseParams: ") + what);
        };
        for (double th : {theta_ne, theta_m, theta_s, theta_vs}) {
            need(th > 1.0, "theta must be > 1");
        }
        for (double a : {alpha_ne, alpha_m, alpha_s, alpha_vs}) {
            need(a > 0.0, "alpha must be > 0");
        }
        need(eps1 > 0.0 && eps2 > 0.0, "eps must be > 0");
        need(sigma1 >= 2.0 && sigma2 >= 2.0, "sigma must be >= 2");
        need(eta > 0.0 && eta <= 1.0, "eta in (0,1]");
        need(kappa >= 1.0, "kappa >= 1");
        need(lambda > 0.0 && lambda <= 1.0, "lambda in (0,1]");
        need(mu > 0.0 && mu <= 1.0, "mu in (0,1]");
        need(nu > 1.0 && nu <= 2.0, "nu in (1,2]");
    }
};

struct CaseBound {
    Case kind;
    double exponent;  // c4 for the first four cases, c12 for the last
    double B;
    double slack;  // decisive inequality value at the solution
    bool feasible;
};

// alpha3 = 2/101 + 32.16 * 1.25506 / log 3: prime-power and ramified-prime
// absorption constant (alpha0 = 1.25506).
inline double alpha3_const() {
    return 2.0 / 101.0 + 32.16 * 1.25506 / std::log(3.0);
}

// v(t) = log(sqrt(1/4 + t^2) + 1) + 4.452 + 83/5, the conductor-sum weight.
inline double v_weight(double t) {
    return std::log(std::sqrt(0.25 + t * t) + 1.0) + 4.452 + 83.0 / 5.0;
}

struct StructuralConstants {
    double alpha3, W0, W1, c5;
};

// W0 = (1/pi) int_0^inf W(t) dt, W1 = (1/pi) int_0^inf v(t) W(t) dt with
// W(t) = ((1 + 101^{-3(theta-1)/2})/(1 - 101^{-3(theta-1)/2}))^2 * 9/(9+4t^2),
// and c5 = 2/log 3 + (4/909)(W0 + (2/log 3) W1).
inline StructuralConstants structural_constants(double theta,
                                                const DegreeProfile&) {
    if (!(theta > 1.0)) {
        throw std::domain_error("structural_constants: theta must be > 1");
    }
    static std::map<double, StructuralConstants> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(theta); it != cache.end()) return it->second;
    }
    const double q = std::pow(101.0, -1.5 * (theta - 1.0));
    const double pref = std::pow((1.0 + q) / (1.0 - q), 2);
    auto W = [pref](double t) { return pref * 9.0 / (9.0 + 4.0 * t * t); };
    const double W0 =
        numerics::integrate(W, 0.0, INFINITY) / std::numbers::pi;
    const double W1 = numerics::integrate(
                          [&](double t) { return v_weight(t) * W(t); }, 0.0,
                          INFINITY) /
                      std::numbers::pi;
    const double l3 = std::log(3.0);
    StructuralConstants out{alpha3_const(), W0, W1,
                            2.0 / l3 + 4.0 / 909.0 * (W0 + 2.0 / l3 * W1)};
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(theta, out);
    return out;
}

// c8 = 1/(1/c2' + 29.57 (1 + Delta0(1)) log(1/c1')), the repelled-zero
// distance coefficient (both branches of the repulsion argument equalized).
inline double c8_of(double eps1, double sigma1, double eta,
                    const DegreeProfile& p) {
    const auto [c1p, c2p] = repulsion_pair(
        repulsion::PairKind::Strip, repulsion::RepulsionParams(eps1, sigma1, eta),
        p);
    if (!(c1p < 1.0)) throw std::domain_error("c8_of: c1' >= 1");
    return 1.0 / (1.0 / c2p + GlobalConstants::R *
                                  (1.0 + profiles::delta0(1.0, p)) *
                                  std::log(1.0 / c1p));
}

inline double c4_of(double eps1, double sigma1, double eta,
                    const DegreeProfile& p) {
    return 1.0 / (2.0 * c8_of(eps1, sigma1, eta, p)) + 0.001;
}

// The pair (C1, C2) = (c1', c2') evaluated at (eps2, sigma2, 1/2).
inline std::pair<double, double> second_pair(const CaseParams& params,
                                             const DegreeProfile& p) {
    return repulsion_pair(
        repulsion::PairKind::Strip,
        repulsion::RepulsionParams(params.eps2, params.sigma2, 0.5), p);
}

// (c2'/L0)(max{log(c1'/(kappa C1)^2), 0} + log L0) <= eta: prerequisite for
// the exceptional-case inequalities.
inline bool eta_condition(const CaseParams& params, const DegreeProfile& p) {
    const auto [c1p, c2p] = repulsion_pair(
        repulsion::PairKind::Strip,
        repulsion::RepulsionParams(params.eps1, params.sigma1, params.eta), p);
    const auto [C1, C2] = second_pair(params, p);
    const double kc1sq = std::pow(params.kappa * C1, 2);
    const double lhs =
        c2p / p.L0 *
        (std::max(std::log(c1p / kc1sq), 0.0) + std::log(p.L0));
    return lhs <= params.eta;
}

// (kappa C1)^2/L < mu/(c4 L^{nu-1}) < lambda/c4 < 1/R0, checked at the worst
// point L = L0 (the first link's slack grows like L^{2-nu}, nu <= 2).
inline bool range_chain_check(const CaseParams& params, double c4,
                              const DegreeProfile& p) {
    const auto [C1, C2] = second_pair(params, p);
    const double kc1sq = std::pow(params.kappa * C1, 2);
    const double first = kc1sq / p.L0;
    const double second = params.mu / (c4 * std::pow(p.L0, params.nu - 1.0));
    const double third = params.lambda / c4;
    return first < second && second < third &&
           third < 1.0 / GlobalConstants::R0;
}

namespace detail {

// c11 = (1 + e^{-(theta-1) c4 c8 log R0})^2 R1 (((1+alpha)/alpha)^2
//        (R1 + 2 alpha omega(alpha)) - R1): low-lying-zero sum coefficient.
inline double c11_const(double theta, double alpha, double c4, double c8,
                        const DegreeProfile& p) {
    const double R1 = GlobalConstants::R1;
    const double om = zerodensity::omega(alpha, p);
    const double ratio = (1.0 + alpha) / alpha;
    const double damp =
        std::pow(1.0 + std::exp(-(theta - 1.0) * c4 * c8 *
                                std::log(GlobalConstants::R0)),
                 2);
    return damp * R1 * (ratio * ratio * (R1 + 2.0 * alpha * om) - R1);
}

// c7(t) = 4 (1 + alpha omega(alpha)) ((1+alpha)/alpha)^2
//         (1 + e^{(1-theta) t / (29.57 (1 + Delta0(1)))})^2.
inline double c7_const(double t, double theta, double alpha,
                       const DegreeProfile& p) {
    const double om = zerodensity::omega(alpha, p);
    const double ratio = (1.0 + alpha) / alpha;
    const double denom = GlobalConstants::R * (1.0 + profiles::delta0(1.0, p));
    return 4.0 * (1.0 + alpha * om) * ratio * ratio *
           std::pow(1.0 + std::exp((1.0 - theta) * t / denom), 2);
}

}  // namespace detail

// Non-exceptional case: minimal c4 with
//   (theta-1)^2 c4^2 - c7(c4) e^{-2 c4/(29.57(1+Delta0(1)))} - E0(c4) > 0,
// E0(t) = c6/L0 + (R0^2/L0^2) e^{-(2t/R0) L0}
//         + Q0 alpha3 (theta-1) t L0 e^{-t L0} + (c5/L0) e^{-2 t L0}.
inline CaseBound case_nonexceptional(const DegreeProfile& p, double theta,
                                     double alpha) {
    const double c6 = zerodensity::c6_const(p);
    const double denom = GlobalConstants::R * (1.0 + profiles::delta0(1.0, p));
    auto slack = [&](double t) {
        double small_tail = 0.0;
        if (std::exp(-t * p.L0) > 0.0) {
            const auto sc = structural_constants(theta, p);
            small_tail = p.Q0 * sc.alpha3 * (theta - 1.0) * t * p.L0 *
                             std::exp(-t * p.L0) +
                         sc.c5 / p.L0 * std::exp(-2.0 * t * p.L0);
        }
        const double e0 =
            c6 / p.L0 +
            std::pow(GlobalConstants::R0 / p.L0, 2) *
                std::exp(-(2.0 * t / GlobalConstants::R0) * p.L0) +
            small_tail;
        return std::pow((theta - 1.0) * t, 2) -
               detail::c7_const(t, theta, alpha, p) *
                   std::exp(-2.0 * t / denom) -
               e0;
    };
    const double hi = 1e3;
    if (!(slack(hi) > 0.0)) {
        return {Case::NonExceptional, hi, 2.0 * theta * hi, slack(hi), false};
    }
    const double c4 = numerics::bisect_min_root(slack, 1e-3, hi, 1e-4);
    return {Case::NonExceptional, c4, 2.0 * theta * c4, slack(c4), true};
}

namespace detail {

struct Shared {
    double c4, c8, c6;
    double C1, C2, kc1sq;
};

inline Shared shared_constants(const CaseParams& params,
                               const DegreeProfile& p) {
    Shared s{};
    s.c8 = c8_of(params.eps1, params.sigma1, params.eta, p);
    s.c4 = 1.0 / (2.0 * s.c8) + 0.001;
    s.c6 = zerodensity::c6_const(p);
    std::tie(s.C1, s.C2) = second_pair(params, p);
    s.kc1sq = std::pow(params.kappa * s.C1, 2);
    return s;
}

// Shared tail of E1/E2/E3: the exponentially small zero-sum remainders.
inline double exp_tail(double theta, double c4, const DegreeProfile& p,
                       bool medium_normalization) {
    // Every term carries a factor <= e^{-c4 L0}; skip the c5 quadrature when
    // that already underflows.
    if (std::exp(-c4 * p.L0) == 0.0) return 0.0;
    const auto sc = structural_constants(theta, p);
    const double a3 = sc.alpha3;
    if (medium_normalization) {
        return p.Q0 * a3 * (theta - 1.0) * p.L0 * c4 * std::exp(-c4 * p.L0) +
               4.0 / std::pow(p.L0 - 0.5, 2) *
                   std::exp(-c4 * (2.0 * p.L0 - 1.0)) +
               sc.c5 / p.L0 * std::exp(-2.0 * c4 * p.L0);
    }
    return p.Q0 * a3 * (theta - 1.0) * p.L0 * p.L0 * c4 *
               std::exp(-c4 * p.L0) +
           4.0 / (p.L0 * std::pow(1.0 - 0.5 / p.L0, 2)) *
               std::exp(-c4 * (2.0 * p.L0 - 1.0)) +
           sc.c5 * std::exp(-2.0 * c4 * p.L0);
}

}  // namespace detail

// Medium: phi_theta(lambda) c4^2 - c11 R0^{-2 c4 c8} - E1(c4) > 0.
inline CaseBound case_medium(const DegreeProfile& p, const CaseParams& params) {
    const auto s = detail::shared_constants(params, p);
    const double e1 = s.c6 / p.L0 +
                      detail::exp_tail(params.theta_m, s.c4, p, true);
    const double slack =
        kernels::phi_theta(params.theta_m, params.lambda) * s.c4 * s.c4 -
        detail::c11_const(params.theta_m, params.alpha_m, s.c4, s.c8, p) *
            std::pow(GlobalConstants::R0, -2.0 * s.c4 * s.c8) -
        e1;
    return {Case::Medium, s.c4, 2.0 * params.theta_m * s.c4, slack,
            slack > 0.0};
}

// Small: 2 (theta-1)^2 e^{-2 lambda} c4^3 - c11 (lambda/c4)^{2 c4 c8 - 1}
//        - c6 c4 L0^{nu-2}/mu - E2(c4) > 0.
inline CaseBound case_small(const DegreeProfile& p, const CaseParams& params) {
    const auto s = detail::shared_constants(params, p);
    const double e2 = detail::exp_tail(params.theta_s, s.c4, p, false) * s.c4 *
                      std::pow(p.L0, params.nu - 2.0) / params.mu;
    const double slack =
        2.0 * std::pow(params.theta_s - 1.0, 2) *
            std::exp(-2.0 * params.lambda) * std::pow(s.c4, 3) -
        detail::c11_const(params.theta_s, params.alpha_s, s.c4, s.c8, p) *
            std::pow(params.lambda / s.c4, 2.0 * s.c4 * s.c8 - 1.0) -
        s.c6 * s.c4 * std::pow(p.L0, params.nu - 2.0) / params.mu - e2;
    return {Case::Small, s.c4, 2.0 * params.theta_s * s.c4, slack,
            slack > 0.0};
}

// Very small: 2 (theta-1)^2 e^{-2 mu/L0^{nu-1}} c4^3
//             - c11 (mu/(c4 L0^{nu-1}))^{2 c4 c8 - 1} - c6/(kappa C1)^2
//             - E3(c4) > 0.
inline CaseBound case_very_small(const DegreeProfile& p,
                                 const CaseParams& params) {
    const auto s = detail::shared_constants(params, p);
    const double lpow = std::pow(p.L0, params.nu - 1.0);
    const double e3 =
        detail::exp_tail(params.theta_vs, s.c4, p, false) / s.kc1sq;
    const double slack =
        2.0 * std::pow(params.theta_vs - 1.0, 2) *
            std::exp(-2.0 * params.mu / lpow) * std::pow(s.c4, 3) -
        detail::c11_const(params.theta_vs, params.alpha_vs, s.c4, s.c8, p) *
            std::pow(params.mu / (s.c4 * lpow), 2.0 * s.c4 * s.c8 - 1.0) -
        s.c6 / s.kc1sq - e3;
    return {Case::VerySmall, s.c4, 2.0 * params.theta_vs * s.c4, slack,
            slack > 0.0};
}

// Extremely small (Gaussian kernel): minimal c12 > max(1/C2, c3) with
//   phi0(c12) c12 - (c13 kappa^2/2)(kappa^2 C1/L0)^{2 c12 C2 - 2}
//   - E4(c12) > 0,
// phi0(t) = e^{-3 (kappa C1)^2 t/L0}(3 - 2 (kappa C1)^2/L0^2),
// E4(t) = (c13/2) e^{-(5t/4 - c3) L0}
//         + (19.17 + 5.4568 Q0 L0^{3/2} sqrt(t)) e^{-(t - c3) L0}
//         + 1.8292 e^{-(2t - c3) L0}.
inline CaseBound case_extremely_small(const DegreeProfile& p,
                                      const CaseParams& params, double c3) {
    const auto s = detail::shared_constants(params, p);
    const double c13 = zerodensity::c13_const(p);
    auto slack = [&](double t) {
        const double phi0 = std::exp(-3.0 * s.kc1sq * t / p.L0) *
                            (3.0 - 2.0 * s.kc1sq / (p.L0 * p.L0));
        const double e4 =
            c13 / 2.0 * std::exp(-(1.25 * t - c3) * p.L0) +
            (19.17 + 5.4568 * p.Q0 * std::pow(p.L0, 1.5) * std::sqrt(t)) *
                std::exp(-(t - c3) * p.L0) +
            1.8292 * std::exp(-(2.0 * t - c3) * p.L0);
        return phi0 * t -
               c13 * params.kappa * params.kappa / 2.0 *
                   std::pow(params.kappa * params.kappa * s.C1 / p.L0,
                            2.0 * t * s.C2 - 2.0) -
               e4;
    };
    const double lo = std::max(1.0 / s.C2, c3) * (1.0 + 1e-9);
    double hi = lo;
    bool bracketed = false;
    for (int i = 0; i < 80 && !bracketed; ++i) {
        hi *= 1.3;
        bracketed = slack(hi) > 0.0;
    }
    if (!bracketed) {
        return {Case::ExtremelySmall, hi, 5.0 * hi, slack(hi), false};
    }
    const double c12 = slack(lo) > 0.0
                           ? lo
                           : numerics::bisect_min_root(slack, lo, hi, 1e-6);
    // Scale floor: x = d0^{c12} must be at least 10^{10}.
    const bool scale_ok = c12 * p.L0 >= 10.0 * std::log(10.0);
    return {Case::ExtremelySmall, c12, 5.0 * c12, slack(c12),
            scale_ok};
}

// Max of the five case exponents; every case must be feasible and the
// precondition checks must pass for the result to be admissible.
struct OverallB {
    std::vector<CaseBound> cases;
    double B = 0.0;
    bool admissible = false;
};

inline OverallB overall_B(const DegreeProfile& p, const CaseParams& params,
                          double c3) {
    params.validate();
    OverallB out;
    out.cases.push_back(case_nonexceptional(p, params.theta_ne, params.alpha_ne));
    out.cases.push_back(case_medium(p, params));
    out.cases.push_back(case_small(p, params));
    out.cases.push_back(case_very_small(p, params));
    out.cases.push_back(case_extremely_small(p, params, c3));
    out.admissible = eta_condition(params, p) &&
                     range_chain_check(params, detail::shared_constants(params, p).c4, p);
    for (const auto& cb : out.cases) {
        out.admissible = out.admissible && cb.feasible;
        out.B = std::max(out.B, cb.B);
    }
    return out;
}

// Per-degree optimizer.  Starting from the worked parameter point, each
// exceptional case's theta is driven down to its feasibility boundary by
// bisection, with a golden-section sweep over that case's alpha (which only
// enters through c11); the extremely-small case takes its minimal c12.  The
// remaining coordinates are B-neutral wherever the point is feasible -- they
// move B only through the feasibility boundary -- so strict-improvement
// coordinate descent leaves them at the seed.  B is safe-rounded upward to 4
// decimals.
struct OptimizedB {
    CaseParams params;
    OverallB result;
};

inline OptimizedB optimize_B(const DegreeProfile& p, double c3,
                             CaseParams seed = {}) {
    seed.validate();
    const double theta_eps = 1e-7;

    // Minimal theta for one exceptional case at fixed alpha.
    auto min_theta = [&](auto slack_of, double alpha) -> std::optional<double> {
        auto F = [&](double th) { return slack_of(th, alpha); };
        if (!(F(4.0) > 0.0)) return std::nullopt;
        return numerics::bisect_min_root(F, 1.0 + theta_eps, 4.0, 1e-9);
    };
    // Golden-section over alpha of the minimal theta.
    auto tune_case = [&](auto slack_of, double alpha_seed, double& theta_out,
                         double& alpha_out) {
        auto height = [&](double a) {
            const auto th = min_theta(slack_of, a);
            return th ? *th : 1e9;
        };
        double lo = 0.05, hi = 20.0;
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = height(x1), f2 = height(x2);
        for (int i = 0; i < 60; ++i) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = height(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = height(x2);
            }
        }
        double alpha_best = (f1 < f2) ? x1 : x2;
        if (height(alpha_seed) <= std::min(f1, f2)) alpha_best = alpha_seed;
        const auto th = min_theta(slack_of, alpha_best);
        if (th) {
            alpha_out = alpha_best;
            theta_out = *th;
        }
    };

    CaseParams best = seed;
    tune_case(
        [&](double th, double a) {
            CaseParams q = best;
            q.theta_m = th;
            q.alpha_m = a;
            return case_medium(p, q).slack;
        },
        seed.alpha_m, best.theta_m, best.alpha_m);
    tune_case(
        [&](double th, double a) {
            CaseParams q = best;
            q.theta_s = th;
            q.alpha_s = a;
            return case_small(p, q).slack;
        },
        seed.alpha_s, best.theta_s, best.alpha_s);
    tune_case(
        [&](double th, double a) {
            CaseParams q = best;
            q.theta_vs = th;
            q.alpha_vs = a;
            return case_very_small(p, q).slack;
        },
        seed.alpha_vs, best.theta_vs, best.alpha_vs);

    OverallB res = overall_B(p, best, c3);
    res.B = std::ceil(res.B * 1e4) / 1e4;  // safe upward rounding
    return {best, res};
}

// Lower-bound density constant: m = c43(a)/a with
//   c43(a) = 0.49 (a-1)/log a - c41 e^{-c39 sqrt(x0/2)}
//            - (c35 x0 log x0 + c40 x0) e^{-sqrt(x0/2)},  x0 = 3^{c6ext}.
// The externals c35, c39, c40, c41 are imported constants; when absent they
// default to the coarse a ~ 1 approximations and the result is flagged
// approximate.
struct LowerBoundExternals {
    std::optional<double> c35, c39, c40, c41;
};

struct LowerBoundResult {
    double m;
    bool approximate;  // true when any external fell back to its default
};

inline LowerBoundResult lower_bound_m(double a,
                                      const LowerBoundExternals& ext = {},
                                      double c6ext = 11.7) {
    if (!(a > 1.0 && a <= 2.0)) {
        throw std::domain_error("lower_bound_m: a must be in (1,2]");
    }
    const double x0 = std::pow(3.0, c6ext);
    const bool approximate =
        !(ext.c35 && ext.c39 && ext.c40 && ext.c41);
    const double c39 = ext.c39.value_or(1.0 / std::sqrt(GlobalConstants::R));
    const double c40 = ext.c40.value_or(std::sqrt(a));
    const double c41 =
        ext.c41.value_or(5.7868 * c39 / c6ext * (a + 1.0) / std::log(a));
    // Default c35: 2 c8-flavor over c6 log 3 with a generic repelled-zero
    // coefficient of order 1; the term is annihilated by e^{-sqrt(x0/2)}.
    const double c35 = ext.c35.value_or(2.0 / (c6ext * std::log(3.0)));
    const double root = std::sqrt(x0 / 2.0);
    const double c43 = 0.49 * (a - 1.0) / std::log(a) -
                       c41 * std::exp(-c39 * root) -
                       (c35 * x0 * std::log(x0) + c40 * x0) * std::exp(-root);
    return {c43 / a, approximate};
}

}  // namespace chebotarev::leastprime
