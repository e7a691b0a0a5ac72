// Constructive check of the refined Turan power-sum bound: for z_1,...,z_N
// with |z_1| >= |z_n| and M = sum |z_n|/(|z_1|+|z_n|), some index
// j0 <= (8+eps) M has Re(s_{j0}) >= eps/(4(8+eps)) |z_1|^{j0}.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace chebotarev::turan {

struct PowerSumInstance {
    std::vector<std::complex<double>> zs;  // non-increasing modulus, zs[0] != 0
    double eps = 1.0;

    PowerSumInstance(std::vector<std::complex<double>> z, double e)
        : zs(std::move(z)), eps(e) {
        if (zs.empty() || std::abs(zs.front()) == 0.0) {
            throw std::domain_error("PowerSumInstance: need a nonzero leading term");
        }
        if (!(eps > 0.0)) throw std::domain_error("PowerSumInstance: eps must be > 0");
        for (size_t i = 1; i < zs.size(); ++i) {
            if (std::abs(zs[i]) > std::abs(zs[0]) + 1e-12) {
                throw std::domain_error(
                    "PowerSumInstance: sequence not sorted by modulus");
            }
        }
    }
};

inline double m_value(const PowerSumInstance& inst) {
    const double z1 = std::abs(inst.zs.front());
    double m = 0.0;
    for (const auto& z : inst.zs) {
        const double r = std::abs(z);
        m += r / (z1 + r);
    }
    return m;  // always >= 1/2: the leading term contributes exactly 1/2
}

struct Witness {
    int j0;
    double value;  // Re(s_{j0})
};

// Smallest j0 in [1, ceil((8+eps) M)] whose power sum meets the bound.
// Power sums by iterated multiplication with compensated summation; the
// instances in scope are small, so no FFT is warranted.
inline Witness turan_witness(const PowerSumInstance& inst) {
    const double z1 = std::abs(inst.zs.front());
    const double m = m_value(inst);
    const int jmax = static_cast<int>(std::ceil((8.0 + inst.eps) * m));
    const double factor = inst.eps / (4.0 * (8.0 + inst.eps));

    std::vector<std::complex<double>> pow(inst.zs.size(), 1.0);
    double z1_pow = 1.0;
    for (int j = 1; j <= jmax; ++j) {
        double sum = 0.0, comp = 0.0;  // Kahan compensation on the real part
        for (size_t i = 0; i < inst.zs.size(); ++i) {
            pow[i] *= inst.zs[i];
            const double y = pow[i].real() - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        z1_pow *= z1;
        if (sum >= factor * z1_pow) return {j, sum};
    }
    throw std::runtime_error(
        "turan_witness: no witness up to j = " + std::to_string(jmax) +
        " (theorem violation)");
}

}  // namespace chebotarev::turan
