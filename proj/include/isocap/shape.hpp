#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "isocap/common.hpp"
#include "isocap/convex_hull.hpp"

namespace isocap {

enum class ShapeKind { Ball, Ellipsoid, Box, Polytope, SegmentFamily };

inline const char* kind_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::Ball: return "ball";
        case ShapeKind::Ellipsoid: return "ellipsoid";
        case ShapeKind::Box: return "box";
        case ShapeKind::Polytope: return "polytope";
        case ShapeKind::SegmentFamily: return "segment_family";
    }
    return "?";
}

/// A compact body in R^d. Ellipsoids and boxes are axis-aligned and centered
/// at the origin; balls carry an explicit center; polytopes are the convex
/// hull of their vertices. A segment family is the countable union of the
/// vertical unit segments at x1 = n^(-alpha), truncated at n = truncation,
/// plus the limit segment at x1 = 0 (d = 3 only; Lebesgue-null).
struct ShapeSpec {
    ShapeKind kind = ShapeKind::Ball;
    int dim = 3;

    Vec center;        // ball
    double radius = 0; // ball
    Vec semi_axes;     // ellipsoid
    Vec half_widths;   // box
    std::vector<Vec> vertices;  // polytope
    double alpha = 0;  // segment family
    int truncation = 0;

    Vec seg_x;  // cached abscissae of the segment family, ascending
    std::shared_ptr<const Hull3D> hull;  // cached polytope hull (d = 3)
};

inline void validate(const ShapeSpec& s) {
    if (s.dim < 2) throw input_error("shape: dim must be >= 2");
    switch (s.kind) {
        case ShapeKind::Ball:
            if (!(s.radius > 0)) throw input_error("ball: radius must be > 0");
            if (s.center.size() != size_t(s.dim))
                throw input_error("ball: center size != dim");
            break;
        case ShapeKind::Ellipsoid:
            if (s.semi_axes.size() != size_t(s.dim))
                throw input_error("ellipsoid: semi_axes size != dim");
            for (double a : s.semi_axes)
                if (!(a > 0)) throw input_error("ellipsoid: semi-axes must be > 0");
            break;
        case ShapeKind::Box:
            if (s.half_widths.size() != size_t(s.dim))
                throw input_error("box: half_widths size != dim");
            for (double h : s.half_widths)
                if (!(h > 0)) throw input_error("box: half-widths must be > 0");
            break;
        case ShapeKind::Polytope:
            if (s.vertices.size() < size_t(s.dim) + 1)
                throw input_error("polytope: need at least dim+1 vertices");
            for (const auto& v : s.vertices)
                if (v.size() != size_t(s.dim))
                    throw input_error("polytope: vertex size != dim");
            break;
        case ShapeKind::SegmentFamily:
            if (s.dim != 3) throw input_error("segment_family: only d = 3");
            if (!(s.alpha > 0)) throw input_error("segment_family: alpha must be > 0");
            if (s.truncation < 1)
                throw input_error("segment_family: truncation must be >= 1");
            break;
    }
}

inline ShapeSpec make_ball(int dim, double radius, Vec center = {}) {
    ShapeSpec s;
    s.kind = ShapeKind::Ball;
    s.dim = dim;
    s.radius = radius;
    s.center = center.empty() ? Vec(dim, 0.0) : std::move(center);
    validate(s);
    return s;
}

inline ShapeSpec make_ellipsoid(Vec semi_axes) {
    ShapeSpec s;
    s.kind = ShapeKind::Ellipsoid;
    s.dim = static_cast<int>(semi_axes.size());
    s.semi_axes = std::move(semi_axes);
    validate(s);
    return s;
}

inline ShapeSpec make_box(Vec half_widths) {
    ShapeSpec s;
    s.kind = ShapeKind::Box;
    s.dim = static_cast<int>(half_widths.size());
    s.half_widths = std::move(half_widths);
    validate(s);
    return s;
}

inline ShapeSpec make_polytope(std::vector<Vec> vertices) {
    ShapeSpec s;
    s.kind = ShapeKind::Polytope;
    s.dim = vertices.empty() ? 0 : static_cast<int>(vertices[0].size());
    s.vertices = std::move(vertices);
    validate(s);
    if (s.dim == 3) s.hull = std::make_shared<Hull3D>(convex_hull_3d(s.vertices));
    return s;
}

inline ShapeSpec make_segment_family(double alpha, int truncation) {
    ShapeSpec s;
    s.kind = ShapeKind::SegmentFamily;
    s.dim = 3;
    s.alpha = alpha;
    s.truncation = truncation;
    validate(s);
    s.seg_x.reserve(truncation + 1);
    s.seg_x.push_back(0.0);  // limit segment
    for (int n = truncation; n >= 1; --n)
        s.seg_x.push_back(std::pow(double(n), -alpha));
    return s;
}

inline const Hull3D& polytope_hull(const ShapeSpec& s) {
    if (s.kind != ShapeKind::Polytope)
        throw input_error("polytope_hull: shape is not a polytope");
    if (s.dim != 3)
        throw input_error("polytope_hull: hull measures implemented for d = 3 only");
    if (!s.hull)
        throw input_error("polytope_hull: shape was not built via make_polytope");
    return *s.hull;
}

inline bool is_convex_kind(const ShapeSpec& s) {
    return s.kind != ShapeKind::SegmentFamily;
}

// ---- basic measures ----

inline double volume(const ShapeSpec& s) {
    validate(s);
    switch (s.kind) {
        case ShapeKind::Ball:
            return unit_ball_volume(s.dim) * std::pow(s.radius, s.dim);
        case ShapeKind::Ellipsoid: {
            double p = unit_ball_volume(s.dim);
            for (double a : s.semi_axes) p *= a;
            return p;
        }
        case ShapeKind::Box: {
            double p = 1.0;
            for (double h : s.half_widths) p *= 2.0 * h;
            return p;
        }
        case ShapeKind::Polytope:
            return polytope_hull(s).volume;
        case ShapeKind::SegmentFamily:
            return 0.0;
    }
    return 0.0;
}

/// Reference center used for enclosing spheres and sampling boxes.
inline Vec center_point(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Ball: return s.center;
        case ShapeKind::Ellipsoid:
        case ShapeKind::Box: return Vec(s.dim, 0.0);
        case ShapeKind::Polytope: {
            Vec c(s.dim, 0.0);
            for (const auto& v : s.vertices)
                for (int k = 0; k < s.dim; ++k) c[k] += v[k] / s.vertices.size();
            return c;
        }
        case ShapeKind::SegmentFamily: return Vec{0.5, 0.0, 0.5};
    }
    return Vec(s.dim, 0.0);
}

inline double circumradius(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Ball: return s.radius;
        case ShapeKind::Ellipsoid:
            return *std::max_element(s.semi_axes.begin(), s.semi_axes.end());
        case ShapeKind::Box: return norm2(s.half_widths);
        case ShapeKind::Polytope: {
            Vec c = center_point(s);
            double r = 0.0;
            for (const auto& v : s.vertices) r = std::max(r, dist(v, c));
            return r;
        }
        case ShapeKind::SegmentFamily: return std::sqrt(0.5);
    }
    return 0.0;
}

/// Radius of a ball around center_point() contained in the shape (0 for
/// Lebesgue-null shapes). For polytopes this is the centroid clearance, a
/// positive lower bound for the true inradius.
inline double inradius(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Ball: return s.radius;
        case ShapeKind::Ellipsoid:
            return *std::min_element(s.semi_axes.begin(), s.semi_axes.end());
        case ShapeKind::Box:
            return *std::min_element(s.half_widths.begin(), s.half_widths.end());
        case ShapeKind::Polytope: {
            const Hull3D& h = polytope_hull(s);
            double r = std::numeric_limits<double>::infinity();
            for (const auto& f : h.faces)
                r = std::min(r, f.offset - dot(f.normal, h.interior));
            return std::max(r, 0.0);
        }
        case ShapeKind::SegmentFamily: return 0.0;
    }
    return 0.0;
}

inline double diameter(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Ball: return 2.0 * s.radius;
        case ShapeKind::Ellipsoid:
            return 2.0 * *std::max_element(s.semi_axes.begin(), s.semi_axes.end());
        case ShapeKind::Box: return 2.0 * norm2(s.half_widths);
        case ShapeKind::Polytope: {
            double d = 0.0;
            for (size_t i = 0; i < s.vertices.size(); ++i)
                for (size_t j = i + 1; j < s.vertices.size(); ++j)
                    d = std::max(d, dist(s.vertices[i], s.vertices[j]));
            return d;
        }
        case ShapeKind::SegmentFamily: return std::sqrt(2.0);
    }
    return 0.0;
}

/// Tight axis-aligned bounding box [lo, hi].
inline void bounding_box(const ShapeSpec& s, Vec& lo, Vec& hi) {
    lo.assign(s.dim, 0.0);
    hi.assign(s.dim, 0.0);
    switch (s.kind) {
        case ShapeKind::Ball:
            for (int k = 0; k < s.dim; ++k) {
                lo[k] = s.center[k] - s.radius;
                hi[k] = s.center[k] + s.radius;
            }
            break;
        case ShapeKind::Ellipsoid:
            for (int k = 0; k < s.dim; ++k) {
                lo[k] = -s.semi_axes[k];
                hi[k] = s.semi_axes[k];
            }
            break;
        case ShapeKind::Box:
            for (int k = 0; k < s.dim; ++k) {
                lo[k] = -s.half_widths[k];
                hi[k] = s.half_widths[k];
            }
            break;
        case ShapeKind::Polytope:
            lo = hi = s.vertices[0];
            for (const auto& v : s.vertices)
                for (int k = 0; k < s.dim; ++k) {
                    lo[k] = std::min(lo[k], v[k]);
                    hi[k] = std::max(hi[k], v[k]);
                }
            break;
        case ShapeKind::SegmentFamily:
            lo = {0.0, 0.0, 0.0};
            hi = {1.0, 0.0, 1.0};
            break;
    }
}

/// Homothety t*K about the origin, t > 0.
inline ShapeSpec scaled(const ShapeSpec& s, double t) {
    if (!(t > 0)) throw input_error("scaled: factor must be > 0");
    switch (s.kind) {
        case ShapeKind::Ball: return make_ball(s.dim, t * s.radius, scale(s.center, t));
        case ShapeKind::Ellipsoid: return make_ellipsoid(scale(s.semi_axes, t));
        case ShapeKind::Box: return make_box(scale(s.half_widths, t));
        case ShapeKind::Polytope: {
            std::vector<Vec> v = s.vertices;
            for (auto& p : v) p = scale(p, t);
            return make_polytope(std::move(v));
        }
        case ShapeKind::SegmentFamily:
            throw input_error("scaled: segment family is not scalable");
    }
    throw input_error("scaled: unknown kind");
}

inline std::string shape_id(const ShapeSpec& s) {
    std::string id = std::string(kind_name(s.kind)) + "_d" + std::to_string(s.dim);
    return id;
}

}  // namespace isocap
