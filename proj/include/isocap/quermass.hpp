#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "isocap/common.hpp"
#include "isocap/parallel.hpp"
#include "isocap/shape.hpp"

namespace isocap {

/// Quermass integrals W_0..W_d of a convex body: the coefficients of
/// |K_r| = sum_n binom(d,n) W_n r^n. W_0 = |K|, d W_1 = P(K),
/// d W_2 = integral of the mean curvature, W_d = omega_d.
struct QuermassVector {
    int d = 0;
    Vec w;
    std::string provenance;  // "exact" or "fitted"
};

inline double steiner_volume(const QuermassVector& q, double r) {
    double v = 0.0;
    for (int n = 0; n <= q.d; ++n)
        v += binomial(q.d, n) * q.w[n] * std::pow(r, n);
    return v;
}

inline double steiner_perimeter(const QuermassVector& q, double r) {
    double p = 0.0;
    for (int n = 1; n <= q.d; ++n)
        p += n * binomial(q.d, n) * q.w[n] * std::pow(r, n - 1);
    return p;
}

namespace detail {

/// Fit the Steiner coefficients from exact parallel volumes at the radii
/// {1..d+1} * r0 and validate at 1.5 * r0; relative residual above `tol`
/// reports a numerical failure.
inline QuermassVector quermass_fit(const ShapeSpec& s, double tol = 1e-8) {
    const int d = s.dim;
    const double r0 = diameter(s);
    std::vector<double> A((d + 1) * (d + 1));
    Vec b(d + 1);
    for (int i = 0; i <= d; ++i) {
        double x = double(i + 1);  // radius in units of r0
        for (int n = 0; n <= d; ++n) A[i * (d + 1) + n] = std::pow(x, n);
        b[i] = parallel_volume_exact(s, (i + 1) * r0);
    }
    Vec coef = solve_dense(A, b);  // coef[n] = binom(d,n) W_n r0^n

    QuermassVector q;
    q.d = d;
    q.provenance = "fitted";
    q.w.assign(d + 1, 0.0);
    for (int n = 0; n <= d; ++n)
        q.w[n] = coef[n] / (binomial(d, n) * std::pow(r0, n));

    double rv = 1.5 * r0;
    double ref = parallel_volume_exact(s, rv);
    double res = std::fabs(steiner_volume(q, rv) - ref) / std::fabs(ref);
    if (!(res <= tol))
        throw numerical_error("quermass: fit residual " + std::to_string(res));
    return q;
}

}  // namespace detail

/// Quermass integrals of a convex shape; exact for balls and boxes (and d=2
/// ellipses), fitted from exact parallel volumes for ellipsoids and polytopes.
inline QuermassVector quermass(const ShapeSpec& s) {
    validate(s);
    if (!is_convex_kind(s)) throw input_error("quermass: convex kinds only");
    const int d = s.dim;
    QuermassVector q;
    q.d = d;
    q.w.assign(d + 1, 0.0);
    switch (s.kind) {
        case ShapeKind::Ball:
            q.provenance = "exact";
            for (int n = 0; n <= d; ++n)
                q.w[n] = unit_ball_volume(d) * std::pow(s.radius, d - n);
            return q;
        case ShapeKind::Box: {
            q.provenance = "exact";
            Vec sides = scale(s.half_widths, 2.0);
            for (int n = 0; n <= d; ++n)
                q.w[n] = detail::elementary_symmetric(sides, d - n) *
                         unit_ball_volume(n) / binomial(d, n);
            return q;
        }
        case ShapeKind::Ellipsoid:
            if (d == 2) {
                q.provenance = "exact";
                q.w[0] = pi * s.semi_axes[0] * s.semi_axes[1];
                q.w[1] = 0.5 * ellipse_perimeter(s.semi_axes[0], s.semi_axes[1]);
                q.w[2] = pi;
                return q;
            }
            return detail::quermass_fit(s);
        case ShapeKind::Polytope:
            return detail::quermass_fit(s);
        default:
            throw input_error("quermass: unsupported kind");
    }
}

/// Surface measure P(K) of a convex shape.
inline double perimeter0(const ShapeSpec& s) { return s.dim * quermass(s).w[1]; }

/// P(K_r): derivative of the Steiner polynomial for convex kinds.
/// Monte Carlo finite differences (perimeter_mc_fd) cover the segment family.
inline double perimeter(const ShapeSpec& s, double r = 0.0) {
    if (!is_convex_kind(s))
        throw input_error("perimeter: use perimeter_mc_fd for the segment family");
    if (r < 0) throw input_error("perimeter: r must be >= 0");
    return steiner_perimeter(quermass(s), r);
}

/// Integral of the mean curvature over the boundary, via the Steiner
/// coefficient extension M(K) = d W_2(K) (exact for C^2 bodies, the standard
/// convex-geometry extension otherwise).
inline double mean_curvature_integral(const ShapeSpec& s) {
    return s.dim * quermass(s).w[2];
}

inline double mean_curvature_integral(const QuermassVector& q) { return q.d * q.w[2]; }

struct AfReport {
    double min_log_slack = 0.0;
    int i = -1, j = -1, k = -1;
    bool pass = true;
};

/// Check W_j^{k-i} >= W_i^{k-j} W_k^{j-i} for all 0 <= i < j < k <= d in log
/// form; reports the worst triple. Slack >= -tol passes.
inline AfReport af_check(const QuermassVector& q, double tol = 1e-8) {
    AfReport rep;
    rep.min_log_slack = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= q.d; ++n)
        if (!(q.w[n] > 0)) throw input_error("af_check: quermass entries must be > 0");
    for (int i = 0; i <= q.d; ++i)
        for (int j = i + 1; j <= q.d; ++j)
            for (int k = j + 1; k <= q.d; ++k) {
                double slack = (k - i) * std::log(q.w[j]) -
                               (k - j) * std::log(q.w[i]) -
                               (j - i) * std::log(q.w[k]);
                if (slack < rep.min_log_slack) {
                    rep.min_log_slack = slack;
                    rep.i = i;
                    rep.j = j;
                    rep.k = k;
                }
            }
    rep.pass = rep.min_log_slack >= -tol;
    return rep;
}

}  // namespace isocap
