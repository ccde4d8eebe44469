#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "isocap/common.hpp"

namespace isocap {

/// Golden-section minimization of a unimodal f on [lo, hi].
/// Returns the minimizer; `rel_tol` is relative to the bracket location.
template <class F>
double golden_min(const F& f, double lo, double hi, double rel_tol = 1e-10,
                  int max_iter = 200) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::fabs(a) + std::fabs(b)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// Nelder-Mead simplex minimization in d dimensions.
/// Stops when the value spread across the simplex falls below `value_tol`.
template <class F>
std::pair<Vec, double> nelder_mead(const F& f, Vec start, double step,
                                   double value_tol = 1e-4, int max_iter = 400) {
    const int d = static_cast<int>(start.size());
    std::vector<Vec> pts(d + 1, start);
    std::vector<double> val(d + 1);
    for (int i = 0; i < d; ++i) pts[i + 1][i] += step;
    for (int i = 0; i <= d; ++i) val[i] = f(pts[i]);

    auto order = [&]() {
        for (int i = 1; i <= d; ++i)
            for (int j = i; j > 0 && val[j] < val[j - 1]; --j) {
                std::swap(val[j], val[j - 1]);
                std::swap(pts[j], pts[j - 1]);
            }
    };
    order();

    for (int it = 0; it < max_iter; ++it) {
        if (val[d] - val[0] < value_tol) break;
        Vec centroid(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) centroid[k] += pts[i][k] / d;

        auto point_at = [&](double t) {
            Vec p(d);
            for (int k = 0; k < d; ++k) p[k] = centroid[k] + t * (pts[d][k] - centroid[k]);
            return p;
        };

        Vec xr = point_at(-1.0);
        double fr = f(xr);
        if (fr < val[0]) {
            Vec xe = point_at(-2.0);
            double fe = f(xe);
            if (fe < fr) {
                pts[d] = xe;
                val[d] = fe;
            } else {
                pts[d] = xr;
                val[d] = fr;
            }
        } else if (fr < val[d - 1]) {
            pts[d] = xr;
            val[d] = fr;
        } else {
            Vec xc = point_at(fr < val[d] ? -0.5 : 0.5);
            double fc = f(xc);
            if (fc < std::min(fr, val[d])) {
                pts[d] = xc;
                val[d] = fc;
            } else {
                for (int i = 1; i <= d; ++i) {
                    for (int k = 0; k < d; ++k)
                        pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                    val[i] = f(pts[i]);
                }
            }
        }
        order();
    }
    return {pts[0], val[0]};
}

}  // namespace isocap
