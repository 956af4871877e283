#pragma once

#include <array>
#include <numbers>
#include <vector>

#include "bandforge/errors.hpp"
#include "bandforge/isometry.hpp"
#include "bandforge/clip.hpp"
#include "bandforge/prismatoid.hpp"

namespace bandforge {

/// Side face i in its own intrinsic plane coordinates: origin at a_i, +x
/// toward b_i, +y chosen so the quad winds counter-clockwise (equivalently:
/// the frame (U, V, n) is right-handed with n the outward face normal).
/// Vertex order matches side_quad: (a_i, b_i, b_{i+1}, a_{i+1}).
[[nodiscard]] inline std::array<Vec2, 4> local_side_quad(const Prismatoid& p, int i) {
    const std::array<Vec3, 4> q = side_quad(p, i);
    const Vec3 u3 = q[1] - q[0];
    const Vec3 n = cross(u3, q[3] - q[0]);  // outward normal
    const Vec3 U = normalized(u3);
    const Vec3 V = normalized(cross(n, U));
    std::array<Vec2, 4> local;
    for (int k = 0; k < 4; ++k)
        local[k] = {dot(q[k] - q[0], U), dot(q[k] - q[0], V)};
    return local;
}

/// The side band cut along lateral edge a_cut b_cut and rolled out
/// isometrically into the plane.
///
/// Face j of the development (j = 0..5) is the image of side face
/// (cut + j) mod 6.  The first face is placed with its cut edge on the y
/// axis — a_cut at (0, |b_cut - a_cut|), b_cut at the origin — and the band
/// unrolls into x > 0; consecutive faces share their hinge edge exactly.
///
/// rim[i] and bottom[i] (i = 0..6) are the planar images of a_{cut+i} and
/// b_{cut+i}; indices 0 and 6 are the two images of the cut edge's endpoints.
/// gap is the angle missing at the cut vertex a_cut if the top polygon's own
/// corner were also laid flat there: developing is an isometry away from the
/// cone points, so the gap equals the vertex curvature at a_cut.
struct Development {
    int cut = 0;
    std::array<std::array<Vec2, 4>, 6> quads{};
    std::array<Vec2, 7> rim{};
    std::array<Vec2, 7> bottom{};
    double gap = 0.0;
};

[[nodiscard]] inline Development develop_band(const Prismatoid& p, int cut,
                                              const Tolerances& tol = {}) {
    if (p.params.z < tol.degenerate_z_rel() * p.params.s)
        throw DegenerateGeometry("flat prismatoid: side band has no interior");

    Development dev;
    dev.cut = ((cut % 6) + 6) % 6;

    const std::array<Vec2, 4> first = local_side_quad(p, dev.cut);
    const double cut_len = norm(first[1] - first[0]);
    PlanarIsometry iso =
        rigid_map_from_edge(first[0], first[1], {0.0, cut_len}, {0.0, 0.0});
    for (int k = 0; k < 4; ++k) dev.quads[0][k] = iso(first[k]);

    for (int j = 1; j < 6; ++j) {
        const std::array<Vec2, 4> local = local_side_quad(p, (dev.cut + j) % 6);
        const std::array<Vec2, 4>& prev = dev.quads[j - 1];
        // Hinge: face j's leading edge (a, b) is face j-1's trailing edge.
        iso = rigid_map_from_edge(local[0], local[1], prev[3], prev[2]);
        for (int k = 0; k < 4; ++k) dev.quads[j][k] = iso(local[k]);
    }

    dev.rim[0] = dev.quads[0][0];
    dev.bottom[0] = dev.quads[0][1];
    for (int j = 0; j < 6; ++j) {
        dev.rim[j + 1] = dev.quads[j][3];
        dev.bottom[j + 1] = dev.quads[j][2];
    }

    const double corner = interior_angle(top_polygon(p), dev.cut);
    const double at_first =
        angle_between(dev.bottom[0] - dev.rim[0], dev.rim[1] - dev.rim[0]);
    const double at_last =
        angle_between(dev.rim[5] - dev.rim[6], dev.bottom[6] - dev.rim[6]);
    dev.gap = 2.0 * std::numbers::pi - corner - at_first - at_last;
    return dev;
}

/// The top hexagon laid into the development plane along one rim edge.
/// `attach` names the top-polygon edge (a_attach, a_attach+1); it lands on
/// rim edge m = (attach - cut) mod 6, the development image of the same edge
/// of the solid.  The placement is the orientation-preserving isometry, so
/// the hexagon spreads to the non-band side of the rim.
struct Placement {
    int cut = 0;
    int attach = 0;
    int offset = 0;  ///< rim edge index m = (attach - cut) mod 6
    std::array<Vec2, 6> hexagon{};
};

[[nodiscard]] inline Placement place_top(const Development& dev, const Hexagon2& top,
                                         int attach) {
    Placement placed;
    placed.cut = dev.cut;
    placed.attach = ((attach % 6) + 6) % 6;
    placed.offset = ((placed.attach - dev.cut) % 6 + 6) % 6;
    const PlanarIsometry iso =
        rigid_map_from_edge(top[placed.attach], top[(placed.attach + 1) % 6],
                            dev.rim[placed.offset], dev.rim[placed.offset + 1]);
    for (int i = 0; i < 6; ++i) placed.hexagon[i] = iso(top[i]);
    return placed;
}

/// Intersection of a placed top hexagon with the six developed band faces.
struct OverlapResult {
    double total = 0.0;                          ///< sum of the six piece areas
    std::array<double, 6> per_quad{};            ///< piece area against each face
    std::array<std::vector<Vec2>, 6> pieces{};   ///< piece polygons (may be empty)
};

[[nodiscard]] inline OverlapResult overlap(const Development& dev,
                                           const Placement& placed) {
    OverlapResult result;
    for (int j = 0; j < 6; ++j) {
        std::vector<Vec2> piece = convex_clip(placed.hexagon, dev.quads[j]);
        const double area = piece.empty() ? 0.0 : signed_area(piece);
        result.per_quad[j] = area;
        result.total += area;
        result.pieces[j] = std::move(piece);
    }
    return result;
}

}  // namespace bandforge
