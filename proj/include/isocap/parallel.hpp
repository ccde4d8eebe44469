#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "isocap/common.hpp"
#include "isocap/distance.hpp"
#include "isocap/exec.hpp"
#include "isocap/quadrature.hpp"
#include "isocap/rng.hpp"
#include "isocap/shape.hpp"

namespace isocap {

struct MCConfig {
    uint64_t seed = 0;
    bool has_seed = false;
    long samples = 1'000'000;
    int workers = 1;
    int batches = 64;

    MCConfig() = default;
    MCConfig(uint64_t s, long n = 1'000'000, int w = 1)
        : seed(s), has_seed(true), samples(n), workers(w) {}
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct ParallelQuery {
    ShapeSpec base;
    double r = 0.0;
};

/// Perimeter of the ellipse with semi-axes (a, b).
inline double ellipse_perimeter(double a, double b) {
    double hi = std::max(a, b), lo = std::min(a, b);
    double k = std::sqrt(1.0 - (lo * lo) / (hi * hi));
    return 4.0 * hi * std::comp_ellint_2(k);
}

namespace detail {

/// Radial coordinate of the boundary of E_r along direction u (unit vector),
/// measured from the ellipsoid center: solves distance(t*u) = r, t >= rho_E(u).
inline double parallel_radial(const Vec& axes, const Vec& u, double r) {
    double q = 0.0;
    const int d = static_cast<int>(axes.size());
    for (int i = 0; i < d; ++i) {
        double t = u[i] / axes[i];
        q += t * t;
    }
    double rho_e = 1.0 / std::sqrt(q);
    if (r == 0.0) return rho_e;
    double amax = *std::max_element(axes.begin(), axes.end());
    double lo = rho_e, hi = amax + r + 1e-12 * (amax + r);

    auto f = [&](double t) {
        Vec x(d);
        for (int i = 0; i < d; ++i) x[i] = t * u[i];
        return ellipsoid_distance(axes, x) - r;
    };
    double flo = f(lo), fhi = f(hi);
    // flo = -r < 0; the outer endpoint is outside the parallel body.
    double a = lo, b = hi, fa = flo, fb = fhi;
    double t = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        // secant proposal, bisection safeguard
        double prop = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
        t = (prop > a && prop < b) ? prop : 0.5 * (a + b);
        double ft = f(t);
        if (ft > 0.0) {
            b = t;
            fb = ft;
        } else {
            a = t;
            fa = ft;
        }
        if (b - a <= 1e-14 * b) break;
    }
    return 0.5 * (a + b);
}

/// Volume of the r-parallel body of an axis-aligned ellipsoid in R^3 by
/// surface quadrature of the radial function (Gauss-Legendre in cos(theta),
/// trapezoid in phi; the integrand is smooth, so convergence is spectral).
inline double ellipsoid_parallel_volume_3d(const Vec& axes, double r,
                                           int n_mu = 64, int n_phi = 128) {
    static thread_local std::vector<double> mu, wmu;
    static thread_local int cached_n = -1;
    if (cached_n != n_mu) {
        gauss_legendre(n_mu, mu, wmu);
        cached_n = n_mu;
    }
    double total = 0.0;
    for (int i = 0; i < n_mu; ++i) {
        double m = mu[i];
        double s = std::sqrt(std::max(0.0, 1.0 - m * m));
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * pi * j / n_phi;
            Vec u{s * std::cos(phi), s * std::sin(phi), m};
            double rho = parallel_radial(axes, u, r);
            ring += rho * rho * rho;
        }
        total += wmu[i] * ring * (2.0 * pi / n_phi);
    }
    return total / 3.0;
}

inline double elementary_symmetric(const Vec& v, int k) {
    if (k < 0 || k > static_cast<int>(v.size())) return 0.0;
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (double x : v)
        for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

}  // namespace detail

/// Exact |K_r| for shapes with a closed-form or quadrature-exact parallel
/// volume (ball, box, polytope in d=3, ellipsoid in d=2,3).
inline double parallel_volume_exact(const ShapeSpec& s, double r) {
    if (r < 0) throw input_error("parallel_volume: r must be >= 0");
    switch (s.kind) {
        case ShapeKind::Ball:
            return unit_ball_volume(s.dim) * std::pow(s.radius + r, s.dim);
        case ShapeKind::Box: {
            // Minkowski sum with a ball: sum_k e_{d-k}(sides) * omega_k r^k.
            Vec sides = scale(s.half_widths, 2.0);
            double v = 0.0;
            for (int k = 0; k <= s.dim; ++k)
                v += detail::elementary_symmetric(sides, s.dim - k) *
                     unit_ball_volume(k) * std::pow(r, k);
            return v;
        }
        case ShapeKind::Polytope: {
            const Hull3D& h = polytope_hull(s);
            return h.volume + h.area * r + h.edge_integral * r * r +
                   unit_ball_volume(3) * r * r * r;
        }
        case ShapeKind::Ellipsoid: {
            if (s.dim == 2) {
                double a = s.semi_axes[0], b = s.semi_axes[1];
                return pi * a * b + ellipse_perimeter(a, b) * r + pi * r * r;
            }
            if (s.dim == 3)
                return detail::ellipsoid_parallel_volume_3d(s.semi_axes, r);
            throw input_error(
                "parallel_volume: exact ellipsoid path implemented for d = 2, 3");
        }
        case ShapeKind::SegmentFamily:
            throw input_error("parallel_volume: segment family requires MC");
    }
    throw input_error("parallel_volume: unknown kind");
}

/// Hit-or-miss |K_r| over the inflated bounding box. Deterministic for a
/// fixed (seed, batches) regardless of worker count.
inline Estimate parallel_volume_mc(const ShapeSpec& s, double r, const MCConfig& mc) {
    if (!mc.has_seed) throw input_error("parallel_volume: MC path requires a seed");
    Vec lo, hi;
    bounding_box(s, lo, hi);
    double box_vol = 1.0;
    for (int k = 0; k < s.dim; ++k) {
        lo[k] -= r;
        hi[k] += r;
        box_vol *= hi[k] - lo[k];
    }
    if (!(box_vol > 0)) throw input_error("parallel_volume: degenerate bounding box");

    const int B = mc.batches;
    std::vector<long> hits(B, 0);
    std::vector<long> counts(B, 0);
    run_batches(B, mc.workers, [&](int b) {
        Rng rng(mc.seed, b);
        long n = mc.samples / B + (b < mc.samples % B ? 1 : 0);
        Vec x(s.dim);
        long h = 0;
        for (long i = 0; i < n; ++i) {
            for (int k = 0; k < s.dim; ++k) x[k] = rng.uniform(lo[k], hi[k]);
            if (distance(s, x) <= r) ++h;
        }
        hits[b] = h;
        counts[b] = n;
    });
    long H = 0, N = 0;
    for (int b = 0; b < B; ++b) {
        H += hits[b];
        N += counts[b];
    }
    double p = double(H) / double(N);
    return {box_vol * p, box_vol * std::sqrt(std::max(p * (1.0 - p), 0.0) / N)};
}

/// |K_r| with stderr; exact paths report stderr 0.
inline Estimate parallel_volume(const ParallelQuery& q,
                                const std::optional<MCConfig>& mc = std::nullopt) {
    if (q.base.kind == ShapeKind::SegmentFamily) {
        if (!mc) throw input_error("parallel_volume: segment family requires MC config");
        return parallel_volume_mc(q.base, q.r, *mc);
    }
    return {parallel_volume_exact(q.base, q.r), 0.0};
}

/// Central-difference perimeter of K_r from hit-or-miss volume estimates with
/// common random numbers; stderr comes from the per-sample indicator spread.
inline Estimate perimeter_mc_fd(const ShapeSpec& s, double r, const MCConfig& mc,
                                double h = 0.0) {
    if (!(r > 0)) throw input_error("perimeter_mc_fd: requires r > 0");
    if (!mc.has_seed) throw input_error("perimeter_mc_fd: MC requires a seed");
    if (h <= 0.0) h = std::max(1e-4, 1e-3 * r);
    if (h >= r) h = 0.5 * r;  // keep the inner radius positive

    Vec lo, hi;
    bounding_box(s, lo, hi);
    double box_vol = 1.0;
    for (int k = 0; k < s.dim; ++k) {
        lo[k] -= r + h;
        hi[k] += r + h;
        box_vol *= hi[k] - lo[k];
    }
    const int B = mc.batches;
    std::vector<double> sums(B, 0.0), sqs(B, 0.0);
    std::vector<long> counts(B, 0);
    run_batches(B, mc.workers, [&](int b) {
        Rng rng(mc.seed, b);
        long n = mc.samples / B + (b < mc.samples % B ? 1 : 0);
        Vec x(s.dim);
        double sum = 0.0, sq = 0.0;
        for (long i = 0; i < n; ++i) {
            for (int k = 0; k < s.dim; ++k) x[k] = rng.uniform(lo[k], hi[k]);
            double d = distance(s, x);
            double ind = (d <= r + h ? 1.0 : 0.0) - (d <= r - h ? 1.0 : 0.0);
            sum += ind;
            sq += ind * ind;
        }
        sums[b] = sum;
        sqs[b] = sq;
        counts[b] = n;
    });
    double S = 0.0, Q = 0.0;
    long N = 0;
    for (int b = 0; b < B; ++b) {
        S += sums[b];
        Q += sqs[b];
        N += counts[b];
    }
    double mean = S / N;
    double var = std::max(Q / N - mean * mean, 0.0);
    double scale_f = box_vol / (2.0 * h);
    return {scale_f * mean, scale_f * std::sqrt(var / N)};
}

/// Uniform sample from the interior of a positive-volume shape.
inline Vec sample_in_shape(const ShapeSpec& s, Rng& rng) {
    switch (s.kind) {
        case ShapeKind::Ball: {
            Vec x = rng.unit_ball(s.dim);
            for (int k = 0; k < s.dim; ++k) x[k] = s.center[k] + s.radius * x[k];
            return x;
        }
        case ShapeKind::Ellipsoid: {
            Vec x = rng.unit_ball(s.dim);
            for (int k = 0; k < s.dim; ++k) x[k] *= s.semi_axes[k];
            return x;
        }
        case ShapeKind::Box: {
            Vec x(s.dim);
            for (int k = 0; k < s.dim; ++k)
                x[k] = rng.uniform(-s.half_widths[k], s.half_widths[k]);
            return x;
        }
        case ShapeKind::Polytope: {
            Vec lo, hi;
            bounding_box(s, lo, hi);
            Vec x(s.dim);
            for (int tries = 0; tries < 1'000'000; ++tries) {
                for (int k = 0; k < s.dim; ++k) x[k] = rng.uniform(lo[k], hi[k]);
                if (contains(s, x)) return x;
            }
            throw numerical_error("sample_in_shape: rejection failed");
        }
        case ShapeKind::SegmentFamily:
            throw input_error("sample_in_shape: zero-volume shape");
    }
    throw input_error("sample_in_shape: unknown kind");
}

}  // namespace isocap
