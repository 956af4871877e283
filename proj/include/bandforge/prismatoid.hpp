#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bandforge/errors.hpp"
#include "bandforge/polygon.hpp"
#include "bandforge/tolerances.hpp"
#include "bandforge/vec.hpp"

namespace bandforge {

/// Which top polygon the prismatoid is built over.
enum class HexagonKind {
    bulged,   ///< equilateral triangle with outward-bulged edge midpoints
    regular,  ///< regular hexagon (control case; parameter h is ignored)
};

/// Shape parameters.  Lengths share one unit; s sets the overall scale.
///   s : triangle side (bulged) or circumradius (regular), s > 0
///   h : outward bulge of the triangle's edge midpoints, h >= 0
///   y : planar outward offset from the top rim to the bottom rim, y >= 0
///   z : vertical drop of the bottom face below the top face, z >= 0
/// y = 0 gives a right prism; z = 0 gives a flat (degenerate) solid, which
/// still builds so the z -> 0 limit can be inspected, but is rejected by the
/// verifier.
struct PrismatoidParams {
    double s = 1.0;
    double h = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using Hexagon2 = std::array<Vec2, 6>;

namespace detail {
inline void require_finite_params(const PrismatoidParams& p) {
    if (!(std::isfinite(p.s) && std::isfinite(p.h) && std::isfinite(p.y) &&
          std::isfinite(p.z)))
        throw InvalidParams("parameters must be finite");
}
}  // namespace detail

/// The hexagon at the heart of the construction: an equilateral triangle with
/// corners a1 = (s/2, 0), a3 = (0, s*sqrt(3)/2), a5 = (-s/2, 0), whose edge
/// midpoints are pushed outward by h to become a0, a2, a4.  Vertices are
/// returned in counter-clockwise order a0..a5 with a0 = (0, -h).
///
/// Interior angles: pi - 2*atan(2h/s) at the even (pushed-midpoint) vertices,
/// pi/3 + 2*atan(2h/s) at the odd (triangle-corner) vertices.  The corners
/// stay acute while h < s*tan(pi/12)/2 and the hexagon stays convex while
/// h < s*sqrt(3)/2; beyond convexity the construction refuses.
[[nodiscard]] inline Hexagon2 build_top_hexagon(double s, double h) {
    if (!(s > 0.0)) throw InvalidParams("hexagon scale s must be positive");
    if (!(h >= 0.0)) throw InvalidParams("bulge h must be non-negative");
    if (!(h < s * std::numbers::sqrt3 / 2.0))
        throw InvalidParams("bulge h too large: hexagon would not be convex");

    const std::array<Vec2, 3> corner = {Vec2{s / 2.0, 0.0},
                                        Vec2{0.0, s * std::numbers::sqrt3 / 2.0},
                                        Vec2{-s / 2.0, 0.0}};
    Hexagon2 hex;
    for (int i = 0; i < 3; ++i) {
        // Bulge vertex sits before corner[i] in the cycle: it is the pushed
        // midpoint of the counter-clockwise triangle edge ending at corner[i].
        const Vec2 p = corner[(i + 2) % 3];
        const Vec2 q = corner[i];
        const Vec2 mid = (p + q) * 0.5;
        const Vec2 outward = normalized(Vec2{(q - p).y, -(q - p).x});
        hex[2 * i] = mid + outward * h;
        hex[2 * i + 1] = q;
    }
    return hex;
}

/// Regular hexagon with circumradius s, first vertex due south, so its layout
/// (a0 at the bottom, mirror symmetry about the y axis) matches the bulged
/// hexagon's.
[[nodiscard]] inline Hexagon2 build_regular_hexagon(double s) {
    if (!(s > 0.0)) throw InvalidParams("hexagon scale s must be positive");
    Hexagon2 hex;
    for (int i = 0; i < 6; ++i) {
        const double ang = std::numbers::pi * (-90.0 + 60.0 * i) / 180.0;
        hex[i] = {s * std::cos(ang), s * std::sin(ang)};
    }
    return hex;
}

/// Interior angle of a convex polygon at vertex i.
[[nodiscard]] inline double interior_angle(const Hexagon2& hex, int i) {
    const Vec2 at = hex[((i % 6) + 6) % 6];
    const Vec2 prev = hex[((i + 5) % 6 + 6) % 6];
    const Vec2 next = hex[((i + 1) % 6 + 6) % 6];
    return angle_between(prev - at, next - at);
}

/// Symmetry center of the hexagon (fixed point of its 120-degree rotation):
/// the triangle centroid for the bulged kind, the origin for the regular one.
[[nodiscard]] inline Vec2 hexagon_center(HexagonKind kind, double s) {
    return kind == HexagonKind::bulged ? Vec2{0.0, s * std::numbers::sqrt3 / 6.0}
                                       : Vec2{0.0, 0.0};
}

/// The solid: top hexagon A in the plane z = 0, bottom hexagon B in the plane
/// z = -params.z, vertices paired a_i <-> b_i, side faces
/// (a_i, b_i, b_{i+1}, a_{i+1}).
///
/// B is A scaled about the hexagon's symmetry center c by
/// lambda = 1 + y / (c_y - a0_y) and dropped by z.  Both hexagon kinds are
/// tangential (their symmetry group permutes all six edges, so the edge lines
/// are equidistant from c), hence the scaling acts as a uniform outward
/// offset of every edge line: each bottom edge stays parallel to its top
/// edge, every side face is a planar isosceles trapezoid, the solid keeps the
/// full three-fold + mirror symmetry, and b0 = a0 + (0, -y, -z) exactly.
/// y = 0 collapses the scaling to the identity (a right prism).
struct Prismatoid {
    PrismatoidParams params;
    HexagonKind kind = HexagonKind::bulged;
    std::array<Vec3, 6> a{};  ///< top vertices, counter-clockwise from above
    std::array<Vec3, 6> b{};  ///< bottom vertices, same pairing
};

[[nodiscard]] inline Prismatoid build_prismatoid(const PrismatoidParams& params,
                                                 HexagonKind kind = HexagonKind::bulged) {
    detail::require_finite_params(params);
    if (!(params.s > 0.0)) throw InvalidParams("s must be positive");
    if (!(params.y >= 0.0)) throw InvalidParams("band offset y must be non-negative");
    if (!(params.z >= 0.0)) throw InvalidParams("drop z must be non-negative");

    const Hexagon2 top = kind == HexagonKind::bulged
                             ? build_top_hexagon(params.s, params.h)
                             : build_regular_hexagon(params.s);
    const Vec2 c = hexagon_center(kind, params.s);
    const double reach = c.y - top[0].y;  // distance from center down to a0
    const double lambda = 1.0 + params.y / reach;

    Prismatoid prism{params, kind, {}, {}};
    for (int i = 0; i < 6; ++i) {
        const Vec2 bi = c + (top[i] - c) * lambda;
        prism.a[i] = {top[i].x, top[i].y, 0.0};
        prism.b[i] = {bi.x, bi.y, -params.z};
    }
    return prism;
}

/// Top hexagon as plane coordinates (its own z = 0 frame).
[[nodiscard]] inline Hexagon2 top_polygon(const Prismatoid& p) {
    Hexagon2 hex;
    for (int i = 0; i < 6; ++i) hex[i] = {p.a[i].x, p.a[i].y};
    return hex;
}

/// Bottom hexagon projected to the plane (dropping z).
[[nodiscard]] inline Hexagon2 bottom_polygon(const Prismatoid& p) {
    Hexagon2 hex;
    for (int i = 0; i < 6; ++i) hex[i] = {p.b[i].x, p.b[i].y};
    return hex;
}

/// Side face i as a 3-D quad (a_i, b_i, b_{i+1}, a_{i+1}), counter-clockwise
/// seen from outside the solid.
[[nodiscard]] inline std::array<Vec3, 4> side_quad(const Prismatoid& p, int i) {
    const int j = ((i % 6) + 6) % 6;
    const int k = (j + 1) % 6;
    return {p.a[j], p.b[j], p.b[k], p.a[k]};
}

enum class Face { top, bottom };

/// Angle deficit (discrete Gaussian curvature) at vertex i of the chosen
/// face: 2*pi minus the sum of the three incident face angles, each measured
/// between 3-D edge vectors.  Positive at every vertex of a convex solid;
/// the twelve deficits sum to 4*pi.
[[nodiscard]] inline double vertex_curvature(const Prismatoid& p, Face face, int i) {
    const int j = ((i % 6) + 6) % 6;
    const int prev = (j + 5) % 6;
    const int next = (j + 1) % 6;
    double sum;
    if (face == Face::top) {
        const Vec3 at = p.a[j];
        sum = angle_between(p.a[prev] - at, p.a[next] - at)   // top polygon
              + angle_between(p.b[j] - at, p.a[next] - at)    // side quad j
              + angle_between(p.b[j] - at, p.a[prev] - at);   // side quad j-1
    } else {
        const Vec3 at = p.b[j];
        sum = angle_between(p.b[prev] - at, p.b[next] - at)   // bottom polygon
              + angle_between(p.a[j] - at, p.b[next] - at)    // side quad j
              + angle_between(p.a[j] - at, p.b[prev] - at);   // side quad j-1
    }
    return 2.0 * std::numbers::pi - sum;
}

/// The two top-rim curvature values of the symmetric solid:
///   delta   at the even vertices a0, a2, a4 (pushed midpoints)
///   epsilon at the odd vertices a1, a3, a5 (triangle corners)
struct CurvaturePair {
    double delta = 0.0;
    double epsilon = 0.0;
};

/// Reads off (delta, epsilon), first checking that the three values within
/// each parity class agree to tol.curvature_symmetry(); disagreement means
/// the solid is not the symmetric construction and raises
/// InternalSymmetryError.
[[nodiscard]] inline CurvaturePair curvature_pair(const Prismatoid& p,
                                                  const Tolerances& tol = {}) {
    std::array<double, 6> k{};
    for (int i = 0; i < 6; ++i) k[i] = vertex_curvature(p, Face::top, i);
    for (int parity = 0; parity < 2; ++parity) {
        const double lo = std::min({k[parity], k[parity + 2], k[parity + 4]});
        const double hi = std::max({k[parity], k[parity + 2], k[parity + 4]});
        if (hi - lo > tol.curvature_symmetry())
            throw InternalSymmetryError(
                "vertex curvatures of equal parity disagree beyond tolerance: "
                "spread " +
                std::to_string(hi - lo) + " rad");
    }
    return {(k[0] + k[2] + k[4]) / 3.0, (k[1] + k[3] + k[5]) / 3.0};
}

/// Structural soundness report.  The angle-shape fields describe the bulged
/// construction's signature (three acute corners, three nearly straight
/// vertices) and are informational for other hexagon kinds; ok() gates only
/// on the structural facts every valid prismatoid must satisfy.
struct ValidationReport {
    bool top_convex = false;
    bool bottom_convex = false;
    bool hull_convex = false;          ///< all 12 vertices behind every face plane
    bool side_faces_planar = false;    ///< each side quad planar
    bool side_edges_parallel = false;  ///< bottom edge parallel to its top edge
    bool odd_angles_acute = false;     ///< top corners a1, a3, a5 acute
    bool even_angles_near_straight = false;  ///< a0, a2, a4 in (pi/2, pi)
    bool top_inside_bottom_shadow = false;   ///< A within the projection of B
    bool strictly_nested = false;            ///< ... with room to spare (y > 0)
    bool degenerate_flat = false;            ///< z below 1e-6 * s
    bool degenerate_hexagon = false;         ///< h ~ 0: even vertices collinear
    std::vector<std::string> notes;

    [[nodiscard]] bool ok() const {
        return top_convex && bottom_convex && hull_convex && side_faces_planar &&
               side_edges_parallel;
    }
};

[[nodiscard]] inline ValidationReport validate(const Prismatoid& p,
                                               const Tolerances& tol = {}) {
    ValidationReport rep;
    const double s = p.params.s;
    const Hexagon2 top = top_polygon(p);
    const Hexagon2 bot = bottom_polygon(p);

    rep.top_convex = is_convex_ccw(top, tol.collinear() * s * s);
    rep.bottom_convex = is_convex_ccw(bot, tol.collinear() * s * s);

    // Convex hull: every vertex on the inner side of each supporting plane.
    const auto behind_plane = [&](Vec3 origin, Vec3 normal) {
        const double nn = norm(normal);
        if (nn <= 0.0) return false;
        for (int v = 0; v < 6; ++v) {
            if (dot(p.a[v] - origin, normal) > tol.hull_rel() * s * nn) return false;
            if (dot(p.b[v] - origin, normal) > tol.hull_rel() * s * nn) return false;
        }
        return true;
    };
    bool hull = behind_plane(p.a[0], {0.0, 0.0, 1.0}) &&   // top face, outward +z
                behind_plane(p.b[0], {0.0, 0.0, -1.0});    // bottom face, outward -z
    for (int i = 0; i < 6 && hull; ++i) {
        const auto q = side_quad(p, i);
        hull = behind_plane(q[0], cross(q[1] - q[0], q[3] - q[0]));
    }
    rep.hull_convex = hull;

    // Side faces: planar, with the bottom edge parallel to the top edge.
    rep.side_faces_planar = true;
    rep.side_edges_parallel = true;
    for (int i = 0; i < 6; ++i) {
        const auto q = side_quad(p, i);
        const Vec3 n = cross(q[1] - q[0], q[2] - q[0]);
        const double nn = norm(n);
        if (nn > 0.0 &&
            std::abs(dot(q[3] - q[0], n)) > tol.planarity_rel() * s * nn)
            rep.side_faces_planar = false;
        const Vec3 topv = q[3] - q[0];
        const Vec3 botv = q[2] - q[1];
        if (norm(cross(topv, botv)) > tol.length_rel() * norm(topv) * norm(botv))
            rep.side_edges_parallel = false;
    }

    // Angle signature of the top hexagon.
    rep.odd_angles_acute = true;
    rep.even_angles_near_straight = true;
    for (int i = 0; i < 6; ++i) {
        const double ang = interior_angle(top, i);
        if (i % 2 == 1 && !(ang < std::numbers::pi / 2.0)) rep.odd_angles_acute = false;
        if (i % 2 == 0 &&
            !(ang > std::numbers::pi / 2.0 && ang < std::numbers::pi))
            rep.even_angles_near_straight = false;
    }

    // Shadow containment of A in the projection of B.
    rep.top_inside_bottom_shadow = true;
    rep.strictly_nested = true;
    for (int i = 0; i < 6; ++i) {
        if (!point_in_convex(top[i], bot, tol.collinear() * s * s))
            rep.top_inside_bottom_shadow = false;
        if (!point_in_convex(top[i], bot, -tol.hull_rel() * s * s))
            rep.strictly_nested = false;  // boundary contact is not strict
    }

    rep.degenerate_flat = p.params.z < tol.degenerate_z_rel() * s;
    rep.degenerate_hexagon =
        p.kind == HexagonKind::bulged && p.params.h < 1e-12 * s;

    if (rep.degenerate_flat) rep.notes.push_back("flat solid: z below 1e-6 * s");
    if (rep.degenerate_hexagon)
        rep.notes.push_back("degenerate hexagon: even vertices collinear (h ~ 0)");
    if (!rep.odd_angles_acute)
        rep.notes.push_back("odd top angles not acute: corner overlap mechanism absent");
    return rep;
}

// ---------------------------------------------------------------------------
// Parameter solver
// ---------------------------------------------------------------------------

/// solve_params result: the (h, z) pair achieving the curvature targets at
/// the given (s, y), plus the achieved curvatures for residual inspection.
struct SolveResult {
    double h = 0.0;
    double z = 0.0;
    CurvaturePair achieved;
};

namespace detail {

[[nodiscard]] inline CurvaturePair curvatures_at(double s, double h, double y, double z,
                                                 const Tolerances& tol) {
    return curvature_pair(build_prismatoid({s, h, y, z}), tol);
}

}  // namespace detail

/// Finds the drop z at which the odd-vertex curvature epsilon reaches
/// `target_eps` (radians) for the bulged hexagon with the given s, h, y.
/// epsilon grows monotonically from 0 (flat) toward its z -> infinity
/// supremum pi - (interior angle at the corners); targets at or above that
/// supremum raise Infeasible.
[[nodiscard]] inline double solve_z_for_epsilon(double s, double h, double y,
                                                double target_eps,
                                                const Tolerances& tol = {}) {
    if (!(target_eps > 0.0)) throw InvalidParams("epsilon target must be positive");
    const double corner = std::numbers::pi / 3.0 + 2.0 * std::atan(2.0 * h / s);
    if (!(target_eps < std::numbers::pi - corner - 1e-12))
        throw Infeasible("epsilon target at or above the steep-face supremum");

    double lo = 0.0;  // epsilon(0) = 0 (flat)
    double hi = 0.1 * s;
    while (detail::curvatures_at(s, h, y, hi, tol).epsilon < target_eps) {
        hi *= 2.0;
        if (hi > 1e9 * s) throw Infeasible("epsilon target unreachable");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at rounding floor
        (detail::curvatures_at(s, h, y, mid, tol).epsilon < target_eps ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Solves for the bulge h and drop z that realise epsilon = target_eps and
/// delta = ratio * target_eps simultaneously (bulged hexagon, s and y fixed;
/// y only sets the band width and does not move the curvatures' ratio).
///
/// Strategy: for each trial h, the inner solve pins z by the epsilon target;
/// the outer bisection then drives f(h) = delta - ratio * epsilon, which
/// rises from 0 (h -> 0: the even vertices flatten into the triangle edges)
/// through the requested ratio.  A 64-point probe finds the sign change.
/// Residuals beyond tol.solver_residual() (1e-9 rad) raise Infeasible.
[[nodiscard]] inline SolveResult solve_params(double target_eps, double ratio,
                                              double s = 1.0, double y = 0.5,
                                              const Tolerances& tol = {}) {
    if (!(s > 0.0) || !(y >= 0.0)) throw InvalidParams("need s > 0 and y >= 0");
    if (!(target_eps > 0.0) || !(ratio > 0.0))
        throw InvalidParams("curvature targets must be positive");

    // h must keep the corner angle clear of the epsilon supremum
    // pi - corner(h) > target_eps, i.e. atan(2h/s) < (2pi/3 - target_eps)/2.
    const double atan_cap = 0.5 * (2.0 * std::numbers::pi / 3.0 - target_eps) - 0.02;
    if (!(atan_cap > 0.0)) throw Infeasible("epsilon target too large for any bulge");
    const double h_cap = 0.5 * s * std::tan(atan_cap);
    const double h_min = 1e-9 * s;

    const auto ratio_gap = [&](double h) {
        const double z = solve_z_for_epsilon(s, h, y, target_eps, tol);
        const CurvaturePair c = detail::curvatures_at(s, h, y, z, tol);
        return c.delta - ratio * c.epsilon;
    };

    // Probe for a bracket: f < 0 at small h, and f crosses zero before the cap
    // whenever the ratio is attainable.
    constexpr int probes = 64;
    double lo = h_min;
    double f_lo = ratio_gap(lo);
    double hi = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= probes; ++i) {
        const double h = h_min + (h_cap - h_min) * static_cast<double>(i) / probes;
        const double f = ratio_gap(h);
        if ((f_lo <= 0.0) != (f <= 0.0)) {
            hi = h;
            bracketed = true;
            break;
        }
        lo = h;
        f_lo = f;
    }
    if (!bracketed)
        throw Infeasible("no bulge h attains the requested delta/epsilon ratio");

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f = ratio_gap(mid);
        if ((f <= 0.0) == (f_lo <= 0.0)) {
            lo = mid;
            f_lo = f;
        } else {
            hi = mid;
        }
    }

    SolveResult out;
    out.h = 0.5 * (lo + hi);
    out.z = solve_z_for_epsilon(s, out.h, y, target_eps, tol);
    out.achieved = detail::curvatures_at(s, out.h, y, out.z, tol);
    if (std::abs(out.achieved.epsilon - target_eps) > tol.solver_residual() ||
        std::abs(out.achieved.delta - ratio * target_eps) > tol.solver_residual())
        throw Infeasible("solver residual above tolerance");
    return out;
}

}  // namespace bandforge
