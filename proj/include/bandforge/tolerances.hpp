#pragma once

#include <cstdlib>
#include <string>

namespace bandforge {

/// Central numeric tolerances.  Every comparison in the library routes through
/// one of these accessors so that a single scale factor (the
/// BANDFORGE_TOLERANCE_SCALE environment variable, default 1.0) can widen or
/// tighten the whole stack uniformly for stress testing.
///
/// Conventions:
///   * "_rel" tolerances multiply a problem-sized quantity (an edge length,
///     the hexagon scale s, a bounding-box diagonal) at the point of use;
///   * angle tolerances are absolute, in radians;
///   * the overlap verdict threshold is `area_factor() * area(top hexagon)`.
struct Tolerances {
    double scale = 1.0;

    /// Cross-product collinearity test, times a squared length scale.
    [[nodiscard]] double collinear() const { return 1e-12 * scale; }
    /// Relative tolerance for length / distance comparisons.
    [[nodiscard]] double length_rel() const { return 1e-9 * scale; }
    /// Side-face planarity, times the hexagon scale s.
    [[nodiscard]] double planarity_rel() const { return 1e-10 * scale; }
    /// Vertex-set symmetry match, times the hexagon scale s.
    [[nodiscard]] double symmetry_rel() const { return 1e-12 * scale; }
    /// Even/odd curvature agreement (radians) before the pair is accepted.
    [[nodiscard]] double curvature_symmetry() const { return 1e-10 * scale; }
    /// Gap-vs-curvature identity and angle-sum checks (radians).
    [[nodiscard]] double curvature_eq() const { return 1e-9 * scale; }
    /// Convex-hull support test, times the hexagon scale s.
    [[nodiscard]] double hull_rel() const { return 1e-10 * scale; }
    /// Overlap verdict threshold factor: tau = area_factor() * area(top).
    [[nodiscard]] double area_factor() const { return 1e-9 * scale; }
    /// Residual demanded of solve_params, in radians.
    [[nodiscard]] double solver_residual() const { return 1e-9 * scale; }
    /// Below z = degenerate_z_rel() * s the prismatoid counts as flat.
    [[nodiscard]] double degenerate_z_rel() const { return 1e-6 * scale; }

    /// Reads BANDFORGE_TOLERANCE_SCALE (default 1.0).  Non-numeric or
    /// non-positive values fall back to 1.0.
    [[nodiscard]] static Tolerances from_env() {
        Tolerances tol;
        if (const char* raw = std::getenv("BANDFORGE_TOLERANCE_SCALE")) {
            char* end = nullptr;
            const double v = std::strtod(raw, &end);
            if (end != raw && v > 0.0) tol.scale = v;
        }
        return tol;
    }
};

}  // namespace bandforge
