#pragma once

#include <cmath>

#include "isocap/common.hpp"
#include "isocap/shape.hpp"

namespace isocap {

namespace detail {

/// Distance from x to the solid axis-aligned ellipsoid with semi-axes a
/// (0 inside). Outside, the foot point is y_i = a_i^2 x_i / (a_i^2 + lam)
/// where lam > 0 solves sum (a_i x_i / (a_i^2 + lam))^2 = 1; the left side is
/// strictly decreasing in lam, so a safeguarded Newton iteration converges.
inline double ellipsoid_distance(const Vec& a, const Vec& x) {
    const int d = static_cast<int>(a.size());
    double level = 0.0;
    for (int i = 0; i < d; ++i) {
        double t = x[i] / a[i];
        level += t * t;
    }
    if (level <= 1.0) return 0.0;

    auto eval = [&](double lam, double& g, double& dg) {
        g = -1.0;
        dg = 0.0;
        for (int i = 0; i < d; ++i) {
            double num = a[i] * x[i];
            double den = a[i] * a[i] + lam;
            double term = num / den;
            g += term * term;
            dg -= 2.0 * term * term / den;
        }
    };

    // Bracket: g(0) > 0 (outside); g(hi) < 0 once hi dominates a_max |x|.
    double amax = *std::max_element(a.begin(), a.end());
    double lo = 0.0, hi = amax * norm2(x) + amax * amax;
    double g, dg;
    eval(hi, g, dg);
    while (g > 0.0) {
        lo = hi;
        hi *= 2.0;
        eval(hi, g, dg);
    }
    double lam = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        eval(lam, g, dg);
        if (g > 0.0)
            lo = lam;
        else
            hi = lam;
        double step = (dg != 0.0) ? lam - g / dg : 0.5 * (lo + hi);
        lam = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * (1.0 + hi)) break;
    }
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        double foot = a[i] * a[i] * x[i] / (a[i] * a[i] + lam);
        double e = x[i] - foot;
        s += e * e;
    }
    return std::sqrt(s);
}

inline double box_distance(const Vec& h, const Vec& x) {
    double s = 0.0;
    for (size_t i = 0; i < h.size(); ++i) {
        double e = std::max(std::fabs(x[i]) - h[i], 0.0);
        s += e * e;
    }
    return std::sqrt(s);
}

/// Distance to the segment family: segments {(c, 0, z) : z in [0, 1]} with
/// abscissae c in spec.seg_x (sorted ascending). Only the x1 offset differs
/// between segments, so the nearest abscissa gives the nearest segment.
inline double segment_family_distance(const ShapeSpec& s, const Vec& x) {
    double dz = 0.0;
    if (x[2] < 0.0) dz = -x[2];
    else if (x[2] > 1.0) dz = x[2] - 1.0;
    auto it = std::lower_bound(s.seg_x.begin(), s.seg_x.end(), x[0]);
    double dx = std::numeric_limits<double>::infinity();
    if (it != s.seg_x.end()) dx = std::min(dx, std::fabs(*it - x[0]));
    if (it != s.seg_x.begin()) dx = std::min(dx, std::fabs(*(it - 1) - x[0]));
    return std::sqrt(dx * dx + x[1] * x[1] + dz * dz);
}

}  // namespace detail

/// Euclidean distance from x to the compact body K; 0 iff x lies in K.
inline double distance(const ShapeSpec& s, const Vec& x) {
    switch (s.kind) {
        case ShapeKind::Ball:
            return std::max(dist(x, s.center) - s.radius, 0.0);
        case ShapeKind::Ellipsoid:
            return detail::ellipsoid_distance(s.semi_axes, x);
        case ShapeKind::Box:
            return detail::box_distance(s.half_widths, x);
        case ShapeKind::Polytope: {
            if (s.dim == 3 && s.hull) {
                const Hull3D& h = *s.hull;
                if (h.contains(x)) return 0.0;
                double best = std::numeric_limits<double>::infinity();
                for (const auto& f : h.faces)
                    best = std::min(best, point_triangle_distance(
                                              x, h.points[f.a], h.points[f.b],
                                              h.points[f.c]));
                return best;
            }
            return polytope_distance_wolfe(s.vertices, x);
        }
        case ShapeKind::SegmentFamily:
            return detail::segment_family_distance(s, x);
    }
    return 0.0;
}

/// Membership in the closed body.
inline bool contains(const ShapeSpec& s, const Vec& x) {
    switch (s.kind) {
        case ShapeKind::Ball:
            return dist(x, s.center) <= s.radius;
        case ShapeKind::Ellipsoid: {
            double lev = 0.0;
            for (int i = 0; i < s.dim; ++i) {
                double t = x[i] / s.semi_axes[i];
                lev += t * t;
            }
            return lev <= 1.0;
        }
        case ShapeKind::Box:
            for (int i = 0; i < s.dim; ++i)
                if (std::fabs(x[i]) > s.half_widths[i]) return false;
            return true;
        case ShapeKind::Polytope:
            if (s.dim == 3 && s.hull) return s.hull->contains(x);
            return polytope_distance_wolfe(s.vertices, x) == 0.0;
        case ShapeKind::SegmentFamily:
            return distance(s, x) == 0.0;
    }
    return false;
}

}  // namespace isocap
