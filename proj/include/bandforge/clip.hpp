#pragma once

#include <span>
#include <vector>

#include "bandforge/polygon.hpp"
#include "bandforge/vec.hpp"

namespace bandforge {

/// Intersection of two convex polygons (both counter-clockwise) by
/// Sutherland-Hodgman clipping of `subject` against each half-plane of
/// `clip`.  Returns the intersection polygon (counter-clockwise, possibly
/// with collinear vertices); fewer than three surviving vertices means an
/// empty intersection and yields an empty vector.
[[nodiscard]] inline std::vector<Vec2> convex_clip(std::span<const Vec2> subject,
                                                   std::span<const Vec2> clip) {
    std::vector<Vec2> out(subject.begin(), subject.end());
    std::vector<Vec2> in;
    const std::size_t m = clip.size();
    for (std::size_t e = 0; e < m && !out.empty(); ++e) {
        const Vec2 a = clip[e];
        const Vec2 b = clip[(e + 1) % m];
        const Vec2 edge = b - a;
        in.swap(out);
        out.clear();
        const std::size_t n = in.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 p = in[i];
            const Vec2 q = in[(i + 1) % n];
            const double dp = cross(edge, p - a);  // >= 0 when p is inside
            const double dq = cross(edge, q - a);
            if (dp >= 0.0) {
                out.push_back(p);
                if (dq < 0.0) out.push_back(p + (q - p) * (dp / (dp - dq)));
            } else if (dq >= 0.0) {
                out.push_back(p + (q - p) * (dp / (dp - dq)));
            }
        }
    }
    if (out.size() < 3) out.clear();
    return out;
}

/// Area of the intersection of two convex counter-clockwise polygons.
[[nodiscard]] inline double convex_clip_area(std::span<const Vec2> subject,
                                             std::span<const Vec2> clip) {
    const std::vector<Vec2> poly = convex_clip(subject, clip);
    return poly.empty() ? 0.0 : signed_area(poly);
}

}  // namespace bandforge
