#pragma once

#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "isocap/common.hpp"

namespace isocap {

struct HullFace {
    int a, b, c;   // vertex indices, counter-clockwise seen from outside
    Vec normal;    // outward unit normal
    double offset; // plane is normal . x = offset
};

/// Triangulated convex hull of a full-dimensional point set in R^3, with the
/// integral-geometric quantities needed for parallel bodies: volume, surface
/// area and the edge term (1/2) sum_e len_e * theta_e over exterior dihedral
/// angles theta_e. Coplanar triangle pairs contribute zero to the edge term,
/// so the triangulation does not have to merge faces.
struct Hull3D {
    std::vector<Vec> points;
    std::vector<HullFace> faces;
    double volume = 0.0;
    double area = 0.0;
    double edge_integral = 0.0;
    Vec interior;  // strictly interior reference point (vertex centroid)
    double scale = 1.0;

    bool contains(const Vec& x, double tol = 0.0) const {
        for (const auto& f : faces)
            if (dot(f.normal, x) > f.offset + tol) return false;
        return true;
    }
};

namespace detail {

inline Vec cross3(const Vec& u, const Vec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

inline double tri_area3(const Vec& a, const Vec& b, const Vec& c) {
    return 0.5 * norm2(cross3(sub(b, a), sub(c, a)));
}

}  // namespace detail

/// Distance from x to the triangle (a, b, c) in R^3.
inline double point_triangle_distance(const Vec& x, const Vec& a, const Vec& b,
                                      const Vec& c) {
    // Region classification after Ericson, "Real-Time Collision Detection".
    Vec ab = sub(b, a), ac = sub(c, a), ax = sub(x, a);
    double d1 = dot(ab, ax), d2 = dot(ac, ax);
    if (d1 <= 0.0 && d2 <= 0.0) return dist(x, a);
    Vec bx = sub(x, b);
    double d3 = dot(ab, bx), d4 = dot(ac, bx);
    if (d3 >= 0.0 && d4 <= d3) return dist(x, b);
    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        double v = d1 / (d1 - d3);
        return dist(x, add(a, scale(ab, v)));
    }
    Vec cx = sub(x, c);
    double d5 = dot(ab, cx), d6 = dot(ac, cx);
    if (d6 >= 0.0 && d5 <= d6) return dist(x, c);
    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        double w = d2 / (d2 - d6);
        return dist(x, add(a, scale(ac, w)));
    }
    double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return dist(x, add(b, scale(sub(c, b), w)));
    }
    double denom = 1.0 / (va + vb + vc);
    double v = vb * denom, w = vc * denom;
    Vec p = add(a, add(scale(ab, v), scale(ac, w)));
    return dist(x, p);
}

/// Incremental convex hull of >= 4 affinely independent points in R^3.
/// Throws input_error when the input is lower-dimensional.
inline Hull3D convex_hull_3d(const std::vector<Vec>& pts) {
    const int m = static_cast<int>(pts.size());
    if (m < 4) throw input_error("convex_hull_3d: need at least 4 vertices");
    for (const auto& p : pts)
        if (p.size() != 3) throw input_error("convex_hull_3d: points must be 3-d");

    double scale_est = 0.0;
    for (const auto& p : pts)
        for (double v : p) scale_est = std::max(scale_est, std::fabs(v));
    scale_est = std::max(scale_est, 1e-30);
    const double eps = 1e-10 * scale_est;

    // Seed tetrahedron: spread points along successive independent directions.
    int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
    double best = -1.0;
    for (int i = 0; i < m; ++i) {
        double d = dist(pts[i], pts[i0]);
        if (d > best) {
            best = d;
            i1 = i;
        }
    }
    if (best < eps) throw input_error("convex_hull_3d: coincident vertices");
    best = -1.0;
    for (int i = 0; i < m; ++i) {
        Vec u = sub(pts[i1], pts[i0]), v = sub(pts[i], pts[i0]);
        double d = norm2(detail::cross3(u, v));
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (best < eps * eps) throw input_error("convex_hull_3d: collinear vertices");
    Vec n0 = detail::cross3(sub(pts[i1], pts[i0]), sub(pts[i2], pts[i0]));
    best = -1.0;
    for (int i = 0; i < m; ++i) {
        double d = std::fabs(dot(n0, sub(pts[i], pts[i0])));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (best < eps * eps * eps) throw input_error("convex_hull_3d: coplanar vertices");

    Hull3D hull;
    hull.points = pts;
    hull.scale = scale_est;
    hull.interior = Vec(3, 0.0);
    for (int k = 0; k < 3; ++k)
        hull.interior[k] =
            (pts[i0][k] + pts[i1][k] + pts[i2][k] + pts[i3][k]) / 4.0;

    auto make_face = [&](int a, int b, int c) {
        HullFace f{a, b, c, {}, 0.0};
        Vec n = detail::cross3(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        double len = norm2(n);
        if (len <= 0.0) throw numerical_error("convex_hull_3d: degenerate face");
        n = scale(n, 1.0 / len);
        if (dot(n, sub(hull.interior, pts[a])) > 0.0) {
            std::swap(f.b, f.c);
            n = scale(n, -1.0);
        }
        f.normal = n;
        f.offset = dot(n, pts[f.a]);
        return f;
    };

    hull.faces.push_back(make_face(i0, i1, i2));
    hull.faces.push_back(make_face(i0, i1, i3));
    hull.faces.push_back(make_face(i0, i2, i3));
    hull.faces.push_back(make_face(i1, i2, i3));

    for (int p = 0; p < m; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<char> visible(hull.faces.size(), 0);
        bool any = false;
        for (size_t f = 0; f < hull.faces.size(); ++f) {
            if (dot(hull.faces[f].normal, pts[p]) > hull.faces[f].offset + eps) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue;  // inside or on the current hull

        // Horizon: undirected edges used by exactly one visible face.
        std::map<std::pair<int, int>, std::pair<int, int>> edge_count;
        for (size_t f = 0; f < hull.faces.size(); ++f) {
            if (!visible[f]) continue;
            int vi[3] = {hull.faces[f].a, hull.faces[f].b, hull.faces[f].c};
            for (int e = 0; e < 3; ++e) {
                int u = vi[e], v = vi[(e + 1) % 3];
                auto key = std::minmax(u, v);
                auto it = edge_count.find(key);
                if (it == edge_count.end())
                    edge_count[key] = {1, u == key.first ? 0 : 1};
                else
                    it->second.first += 1;
            }
        }
        std::vector<HullFace> next;
        for (size_t f = 0; f < hull.faces.size(); ++f)
            if (!visible[f]) next.push_back(hull.faces[f]);
        for (const auto& [key, cnt] : edge_count)
            if (cnt.first == 1) next.push_back(make_face(key.first, key.second, p));
        hull.faces = std::move(next);
    }

    // Volume and area from the facet triangles; exterior dihedral angles from
    // facet adjacency (every hull edge borders exactly two facets).
    hull.volume = 0.0;
    hull.area = 0.0;
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t f = 0; f < hull.faces.size(); ++f) {
        const auto& fc = hull.faces[f];
        const Vec &a = pts[fc.a], &b = pts[fc.b], &c = pts[fc.c];
        hull.area += detail::tri_area3(a, b, c);
        Vec u = sub(a, hull.interior), v = sub(b, hull.interior),
            w = sub(c, hull.interior);
        hull.volume += dot(u, detail::cross3(v, w)) / 6.0;
        int vi[3] = {fc.a, fc.b, fc.c};
        for (int e = 0; e < 3; ++e) {
            auto key = std::minmax(vi[e], vi[(e + 1) % 3]);
            edge_faces[key].push_back(static_cast<int>(f));
        }
    }
    hull.volume = std::fabs(hull.volume);

    hull.edge_integral = 0.0;
    for (const auto& [key, fl] : edge_faces) {
        if (fl.size() != 2) throw numerical_error("convex_hull_3d: open edge");
        double cosang = std::clamp(
            dot(hull.faces[fl[0]].normal, hull.faces[fl[1]].normal), -1.0, 1.0);
        double theta = std::acos(cosang);
        double len = dist(pts[key.first], pts[key.second]);
        hull.edge_integral += 0.5 * len * theta;
    }
    return hull;
}

/// Minimum-norm point in conv{p_i - x}: distance from x to the convex hull of
/// a point set in any dimension (Wolfe's active-set method). `tol` is relative
/// to the data scale.
inline double polytope_distance_wolfe(const std::vector<Vec>& pts, const Vec& x,
                                      double tol = 1e-10) {
    const int m = static_cast<int>(pts.size());
    const int d = static_cast<int>(x.size());
    std::vector<Vec> s(m, Vec(d));
    double scale_est = 0.0;
    for (int i = 0; i < m; ++i) {
        s[i] = sub(pts[i], x);
        scale_est = std::max(scale_est, norm2(s[i]));
    }
    if (scale_est == 0.0) return 0.0;
    const double eps = tol * scale_est * scale_est;

    int start = 0;
    for (int i = 1; i < m; ++i)
        if (dot(s[i], s[i]) < dot(s[start], s[start])) start = i;
    std::vector<int> corral{start};
    std::vector<double> lambda{1.0};

    Vec q = s[start];
    for (int outer = 0; outer < 200; ++outer) {
        double qq = dot(q, q);
        if (qq <= eps) return 0.0;
        int best = -1;
        double bestdot = qq - eps;
        for (int i = 0; i < m; ++i) {
            double di = dot(q, s[i]);
            if (di < bestdot) {
                bestdot = di;
                best = i;
            }
        }
        if (best < 0) break;  // optimality: q . s_i >= q . q for all i
        bool in_corral = false;
        for (int c : corral)
            if (c == best) in_corral = true;
        if (in_corral) break;
        corral.push_back(best);
        lambda.push_back(0.0);

        // Minor cycle: project onto the affine hull of the corral, backtrack
        // along the segment to stay in the simplex, drop zero coordinates.
        for (int minor = 0; minor < 200; ++minor) {
            const int k = static_cast<int>(corral.size());
            std::vector<double> A((k + 1) * (k + 1), 0.0);
            Vec rhs(k + 1, 0.0);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j)
                    A[i * (k + 1) + j] = dot(s[corral[i]], s[corral[j]]);
                A[i * (k + 1) + k] = 1.0;
                A[k * (k + 1) + i] = 1.0;
            }
            rhs[k] = 1.0;
            Vec sol;
            try {
                sol = solve_dense(A, rhs);
            } catch (const numerical_error&) {
                corral.pop_back();
                lambda.pop_back();
                break;
            }
            bool interior = true;
            for (int i = 0; i < k; ++i)
                if (sol[i] <= 1e-12) interior = false;
            if (interior) {
                lambda.assign(sol.begin(), sol.begin() + k);
                break;
            }
            double theta = 1.0;
            for (int i = 0; i < k; ++i)
                if (sol[i] <= 1e-12 && lambda[i] - sol[i] > 0.0)
                    theta = std::min(theta, lambda[i] / (lambda[i] - sol[i]));
            std::vector<int> nc;
            std::vector<double> nl;
            for (int i = 0; i < k; ++i) {
                double li = (1.0 - theta) * lambda[i] + theta * sol[i];
                if (li > 1e-12) {
                    nc.push_back(corral[i]);
                    nl.push_back(li);
                }
            }
            if (nc.empty()) {
                nc.push_back(corral[0]);
                nl.push_back(1.0);
            }
            corral = std::move(nc);
            lambda = std::move(nl);
        }
        q.assign(d, 0.0);
        for (size_t i = 0; i < corral.size(); ++i)
            for (int k2 = 0; k2 < d; ++k2) q[k2] += lambda[i] * s[corral[i]][k2];
    }
    return norm2(q);
}

}  // namespace isocap
