// Small derivative-free minimizer: Nelder-Mead simplex with an optional
// rectangular grid seed.  Used by the repulsion-constant and least-prime
// parameter searches; objectives are cheap and low dimensional.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace chebotarev::optimize {

struct Result {
    std::vector<double> x;
    double fx = 0.0;
};

// Nelder-Mead with standard coefficients; `scale` sets the initial simplex
// edge per coordinate.
inline Result nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0,
                          const std::vector<double>& scale, int max_iter = 200,
                          double ftol = 1e-12) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += scale[i];
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    auto order = [&] {
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> np(n + 1);
        std::vector<double> nf(n + 1);
        for (size_t i = 0; i <= n; ++i) {
            np[i] = pts[idx[i]];
            nf[i] = fv[idx[i]];
        }
        pts.swap(np);
        fv.swap(nf);
    };

    for (int it = 0; it < max_iter; ++it) {
        order();
        if (std::abs(fv[n] - fv[0]) <=
            ftol * (std::abs(fv[0]) + std::abs(fv[n])) + 1e-300) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (size_t j = 0; j < n; ++j) {
                p[j] = centroid[j] + coef * (pts[n][j] - centroid[j]);
            }
            return p;
        };

        const auto refl = blend(-1.0);
        const double fr = f(refl);
        if (fr < fv[0]) {
            const auto exp_pt = blend(-2.0);
            const double fe = f(exp_pt);
            if (fe < fr) {
                pts[n] = exp_pt;
                fv[n] = fe;
            } else {
                pts[n] = refl;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            pts[n] = refl;
            fv[n] = fr;
        } else {
            const auto con = blend(fr < fv[n] ? -0.5 : 0.5);
            const double fc = f(con);
            if (fc < std::min(fr, fv[n])) {
                pts[n] = con;
                fv[n] = fc;
            } else {  // shrink toward the best point
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                    }
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    order();
    return {pts[0], fv[0]};
}

// Grid seed over a box, then Nelder-Mead refinement from the best cells.
inline Result grid_then_nm(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<std::pair<double, double>>& box,
    const std::vector<int>& grid, int max_iter = 200, int refine_top = 3) {
    const size_t n = box.size();
    std::vector<int> idx(n, 0);
    std::vector<std::pair<double, std::vector<double>>> cells;
    for (;;) {
        std::vector<double> x(n);
        for (size_t i = 0; i < n; ++i) {
            const double t = grid[i] > 1
                                 ? static_cast<double>(idx[i]) / (grid[i] - 1)
                                 : 0.5;
            x[i] = box[i].first + t * (box[i].second - box[i].first);
        }
        cells.emplace_back(f(x), x);
        size_t k = 0;
        while (k < n && ++idx[k] == grid[k]) idx[k++] = 0;
        if (k == n) break;
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Result best{cells.front().second, cells.front().first};
    const int tops = std::min<int>(refine_top, static_cast<int>(cells.size()));
    for (int i = 0; i < tops; ++i) {
        std::vector<double> scale(n);
        for (size_t j = 0; j < n; ++j) {
            scale[j] = (box[j].second - box[j].first) /
                       std::max(grid[j] - 1, 1) * 0.5;
        }
        const Result r = nelder_mead(f, cells[i].second, scale, max_iter);
        if (r.fx < best.fx) best = r;
    }
    return best;
}

}  // namespace chebotarev::optimize
