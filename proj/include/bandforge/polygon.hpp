#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "bandforge/vec.hpp"

namespace bandforge {

/// Shoelace area; positive for counter-clockwise vertex order.
[[nodiscard]] inline double signed_area(std::span<const Vec2> poly) {
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = poly[i];
        const Vec2 q = poly[(i + 1) % n];
        twice += cross(p, q);
    }
    return 0.5 * twice;
}

[[nodiscard]] inline Vec2 polygon_centroid(std::span<const Vec2> poly) {
    // Area-weighted centroid; falls back to the vertex mean for degenerate
    // (near-zero-area) inputs.
    const std::size_t n = poly.size();
    double twice = 0.0;
    Vec2 acc{0.0, 0.0};
    Vec2 mean{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = poly[i];
        const Vec2 q = poly[(i + 1) % n];
        const double w = cross(p, q);
        twice += w;
        acc += (p + q) * w;
        mean += p;
    }
    if (std::abs(twice) < 1e-300) return mean / static_cast<double>(n);
    return acc / (3.0 * twice);
}

/// Axis-aligned bounding box.
struct Box2 {
    Vec2 lo{0.0, 0.0};
    Vec2 hi{0.0, 0.0};

    [[nodiscard]] double width() const { return hi.x - lo.x; }
    [[nodiscard]] double height() const { return hi.y - lo.y; }
    [[nodiscard]] double area() const { return width() * height(); }
    [[nodiscard]] double diagonal() const { return norm(hi - lo); }

    void expand(Vec2 p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }

    [[nodiscard]] static Box2 of(std::span<const Vec2> pts) {
        Box2 box{pts.front(), pts.front()};
        for (const Vec2 p : pts) box.expand(p);
        return box;
    }

    /// Smallest box containing both; meaningful only for boxes built with of().
    [[nodiscard]] static Box2 join(const Box2& a, const Box2& b) {
        Box2 box = a;
        box.expand(b.lo);
        box.expand(b.hi);
        return box;
    }

    /// Intersection box; empty() is true when the inputs do not meet.
    [[nodiscard]] static Box2 meet(const Box2& a, const Box2& b) {
        return {{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)},
                {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)}};
    }

    [[nodiscard]] bool empty() const { return hi.x <= lo.x || hi.y <= lo.y; }
};

/// True when the vertex cycle is convex and counter-clockwise.  Collinear
/// triples are accepted (turn >= -eps_cross); eps_cross has units of area.
[[nodiscard]] inline bool is_convex_ccw(std::span<const Vec2> poly, double eps_cross = 0.0) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const Vec2 c = poly[(i + 2) % n];
        if (cross(b - a, c - b) < -eps_cross) return false;
    }
    return signed_area(poly) > 0.0;
}

/// Point-in-convex-polygon test for counter-clockwise vertex order.  Boundary
/// points count as inside (half-plane tests use >= -eps_cross).
[[nodiscard]] inline bool point_in_convex(Vec2 p, std::span<const Vec2> poly,
                                          double eps_cross = 0.0) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if (cross(b - a, p - a) < -eps_cross) return false;
    }
    return true;
}

}  // namespace bandforge
