#pragma once

#include <cmath>
#include <vector>

#include "isocap/common.hpp"

namespace isocap {

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
inline constexpr double gk_node[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& val, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double k = gk_wk[7] * fc;
    double g = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double x = h * gk_node[i];
        double s = f(c - x) + f(c + x);
        k += gk_wk[i] * s;
        if (i % 2 == 1) g += gk_wg[i / 2] * s;
    }
    val = k * h;
    double diff = std::fabs(k - g) * std::fabs(h);
    // QUADPACK-style conservative scaling of the Gauss/Kronrod discrepancy.
    err = diff;
    double scaled = 200.0 * diff;
    if (scaled < 1.0) err = diff * std::sqrt(scaled);
}

}  // namespace detail

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
template <class F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-12,
                     double abs_tol = 0.0, int max_intervals = 4000) {
    struct Seg {
        double a, b, val, err;
    };
    std::vector<Seg> segs;
    Seg s0{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, s0.val, s0.err);
    segs.push_back(s0);
    for (int iter = 0; iter < max_intervals; ++iter) {
        double total = 0.0, toterr = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].val;
            toterr += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (toterr <= rel_tol * std::fabs(total) + abs_tol)
            return {total, toterr, true};
        Seg& w = segs[worst];
        double mid = 0.5 * (w.a + w.b);
        if (mid <= w.a || mid >= w.b) break;  // interval not splittable
        Seg left{w.a, mid, 0.0, 0.0}, right{mid, w.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.val, left.err);
        detail::gk15(f, right.a, right.b, right.val, right.err);
        w = left;
        segs.push_back(right);
    }
    double total = 0.0, toterr = 0.0;
    for (auto& s : segs) {
        total += s.val;
        toterr += s.err;
    }
    return {total, toterr, toterr <= 1e3 * (rel_tol * std::fabs(total) + abs_tol)};
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace isocap
