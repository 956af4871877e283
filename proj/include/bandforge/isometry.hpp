#pragma once

#include "bandforge/errors.hpp"
#include "bandforge/vec.hpp"

namespace bandforge {

/// Orientation-preserving planar rigid motion p -> R p + t with
/// R = [[c, -s], [s, c]].
struct PlanarIsometry {
    double c = 1.0;  ///< cos of the rotation angle
    double s = 0.0;  ///< sin of the rotation angle
    Vec2 t{0.0, 0.0};

    [[nodiscard]] constexpr Vec2 operator()(Vec2 p) const {
        return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
    }
};

/// The unique orientation-preserving rigid motion taking the directed segment
/// (src_a, src_b) onto (dst_a, dst_b).  The two segments must have equal
/// nonzero length (up to the caller's tolerance); the rotation is computed
/// from unit direction vectors, so small length mismatch only perturbs the
/// image of src_b.
[[nodiscard]] inline PlanarIsometry rigid_map_from_edge(Vec2 src_a, Vec2 src_b, Vec2 dst_a,
                                                        Vec2 dst_b) {
    const double src_len = distance(src_a, src_b);
    const double dst_len = distance(dst_a, dst_b);
    if (src_len <= 0.0 || dst_len <= 0.0)
        throw GeometryError("rigid_map_from_edge: zero-length edge");
    const Vec2 u = (src_b - src_a) / src_len;
    const Vec2 v = (dst_b - dst_a) / dst_len;
    PlanarIsometry iso;
    iso.c = dot(u, v);
    iso.s = cross(u, v);
    // Renormalise (c, s) so the map is exactly rigid even after rounding.
    const double n = std::hypot(iso.c, iso.s);
    iso.c /= n;
    iso.s /= n;
    iso.t = dst_a - Vec2{iso.c * src_a.x - iso.s * src_a.y, iso.s * src_a.x + iso.c * src_a.y};
    return iso;
}

}  // namespace bandforge
