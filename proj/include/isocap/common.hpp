#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#define ISOCAP_VERSION "0.1.0"

namespace isocap {

using Vec = std::vector<double>;

/// Invalid input / unsupported shape-operation combination.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadrature, fit or Monte Carlo failed to reach the requested tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double pi = std::numbers::pi;

/// Volume of the unit ball in dimension d (omega_0 = 1).
inline double unit_ball_volume(int d) {
    if (d < 0) throw input_error("unit_ball_volume: d must be >= 0");
    return std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

/// Unit-ball volume carried together with its dimension.
struct OmegaD {
    int d = 0;
    double value = 0.0;
    explicit OmegaD(int dim) : d(dim), value(unit_ball_volume(dim)) {}
};

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

// ---- small dense vector helpers (dimension is runtime, d <= ~10) ----

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scale(const Vec& a, double t) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

inline double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double e = a[i] - b[i];
        s += e * e;
    }
    return std::sqrt(s);
}

/// Distance from point p to the segment [a, b].
inline double segment_distance(const Vec& p, const Vec& a, const Vec& b) {
    Vec u = sub(b, a);
    double uu = dot(u, u);
    double t = 0.0;
    if (uu > 0.0) {
        t = (dot(p, u) - dot(a, u)) / uu;
        t = std::clamp(t, 0.0, 1.0);
    }
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double e = p[i] - (a[i] + t * u[i]);
        s += e * e;
    }
    return std::sqrt(s);
}

/// Solve A x = b in place by Gaussian elimination with partial pivoting.
/// A is n x n row-major. Throws numerical_error on a (near-)singular pivot.
inline Vec solve_dense(std::vector<double> A, Vec b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[r * n + col]) > std::fabs(A[piv * n + col])) piv = r;
        if (std::fabs(A[piv * n + col]) < 1e-300)
            throw numerical_error("solve_dense: singular matrix");
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = A[r * n + col] / A[col * n + col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * x[c];
        x[r] = s / A[r * n + r];
    }
    return x;
}

}  // namespace isocap
