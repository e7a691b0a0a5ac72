// Per-degree assumptions: a degree class n0 with a discriminant floor d0,
// L0 = log d0, and the degree-to-discriminant ratio bound Q0.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebotarev::profiles {

struct DegreeProfile {
    int n0 = 2;          // field degree class (21 stands for "21 and up")
    double d0 = 3.0;     // discriminant floor
    double L0 = 0.0;     // log d0, recomputed on construction
    double Q0 = 0.0;     // n0/L0 for 2 <= n0 <= 20, else 1/log 10

    DegreeProfile() = default;
    DegreeProfile(int n, double d) : n0(n), d0(d) {
        if (n0 < 2) throw std::domain_error("DegreeProfile: degree must be >= 2");
        if (!(d0 >= 3.0)) {
            throw std::domain_error("DegreeProfile: discriminant floor must be >= 3");
        }
        L0 = std::log(d0);
        Q0 = (n0 <= 20) ? n0 / L0 : 1.0 / std::log(10.0);
        // Minkowski constraint n <= 2 log d / log 3.
        if (n0 > 2.0 * L0 / std::log(3.0) + 1e-12) {
            throw std::domain_error(
                "DegreeProfile: Minkowski constraint violated for n0=" +
                std::to_string(n0));
        }
    }
};

// delta0(T0) = Q0 log(T0 + 2): the bound on log(tau^{n_L})/log d_L for |t|<=T0.
inline double delta0(double t0, const DegreeProfile& p) {
    if (!(t0 >= 0.0)) throw std::domain_error("delta0: t0 must be >= 0");
    return p.Q0 * std::log(t0 + 2.0);
}

// Discriminant floors for the repulsion-constant table (one row per degree
// class; the n0 = 21 row stands for all degrees 21 and up with d0 = 10^21).
inline const std::vector<DegreeProfile>& builtin_profiles() {
    static const std::vector<DegreeProfile> rows = [] {
        const std::pair<int, double> raw[] = {
            {2, 400000.0}, {3, 239.0},      {4, 320.0},     {5, 1609.0},
            {6, 9747.0},   {7, 184607.0},   {8, 1257728.0}, {9, 2.29e7},
            {10, 1.56e8},  {11, 3.91e9},    {12, 2.74e10},  {13, 7.56e11},
            {14, 5.43e12}, {15, 1.61e14},   {16, 1.17e15},  {17, 3.70e16},
            {18, 2.73e17}, {19, 9.03e18},   {20, 6.74e19},  {21, 1e21},
        };
        std::vector<DegreeProfile> v;
        for (auto [n, d] : raw) v.emplace_back(n, d);
        return v;
    }();
    return rows;
}

// Discriminant floors used for the least-prime exponent table.  The small
// degrees use coarser floors than the repulsion table (10^10 down to 10^7);
// from degree 9 on the two tables agree.
inline const std::vector<DegreeProfile>& leastprime_profiles() {
    static const std::vector<DegreeProfile> rows = [] {
        const std::pair<int, double> raw[] = {
            {2, 1e10},     {3, 1e10},       {4, 1e8},       {5, 1e8},
            {6, 1e8},      {7, 1e8},        {8, 1e7},       {9, 2.29e7},
            {10, 1.56e8},  {11, 3.91e9},    {12, 2.74e10},  {13, 7.56e11},
            {14, 5.43e12}, {15, 1.61e14},   {16, 1.17e15},  {17, 3.70e16},
            {18, 2.73e17}, {19, 9.03e18},   {20, 6.74e19},  {21, 1e21},
        };
        std::vector<DegreeProfile> v;
        for (auto [n, d] : raw) v.emplace_back(n, d);
        return v;
    }();
    return rows;
}

// Profile for a degree above the tabulated range: d0 = 10^n.
inline DegreeProfile high_degree_profile(int n) {
    if (n < 21) throw std::domain_error("high_degree_profile: degree must be >= 21");
    return DegreeProfile(n, std::pow(10.0, n));
}

}  // namespace chebotarev::profiles
