#pragma once

#include <charconv>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "bandforge/errors.hpp"
#include "bandforge/prismatoid.hpp"
#include "bandforge/verifier.hpp"

namespace bandforge {

/// A named, reproducible configuration.
struct Preset {
    std::string name;
    PrismatoidParams params;
    HexagonKind kind = HexagonKind::bulged;
    std::string summary;
};

/// The two published configurations.  Both share the hexagon (s = 1,
/// h = 0.05: corners at 71.4 degrees) and the band width y = 0.5; they differ
/// in the drop z and hence in how much curvature sits on the rim.
///
///   fig1b : z = 0.095, the shallow solid (z/y = 0.19); delta = 0.2014 deg,
///           epsilon = 0.9752 deg.
///   fig3  : z solved so that epsilon = 2 degrees exactly (z = 0.13714...,
///           delta = 0.4081 deg).
///
/// Every cut/attachment combination overlaps at both presets, with the
/// thinnest overlap three orders of magnitude above the verdict threshold.
[[nodiscard]] inline Preset preset(std::string_view name, const Tolerances& tol = {}) {
    if (name == "fig1b") {
        return {"fig1b",
                {1.0, 0.05, 0.5, 0.095},
                HexagonKind::bulged,
                "shallow solid, z/y = 0.19, epsilon ~ 1 deg"};
    }
    if (name == "fig3") {
        const double z = solve_z_for_epsilon(
            1.0, 0.05, 0.5, 2.0 * std::numbers::pi / 180.0, tol);
        return {"fig3",
                {1.0, 0.05, 0.5, z},
                HexagonKind::bulged,
                "epsilon = 2 deg exactly"};
    }
    throw UsageError("unknown preset '" + std::string(name) +
                     "' (available: fig1b, fig3)");
}

namespace detail {

[[nodiscard]] inline double parse_double(std::string_view text,
                                         std::string_view what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw UsageError("cannot parse " + std::string(what) + " from '" +
                         std::string(text) + "'");
    return value;
}

[[nodiscard]] inline std::vector<std::string_view> split(std::string_view text,
                                                         char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

/// Parses "k=v,k=v,..." with keys from {s, h, y, z} onto the given defaults.
[[nodiscard]] inline PrismatoidParams parse_params(std::string_view text,
                                                   PrismatoidParams base = {1.0, 0.0,
                                                                            0.0, 0.0}) {
    if (text.empty()) throw UsageError("empty parameter list");
    for (const std::string_view item : detail::split(text, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("expected key=value, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const double value = detail::parse_double(item.substr(eq + 1), key);
        if (key == "s") base.s = value;
        else if (key == "h") base.h = value;
        else if (key == "y") base.y = value;
        else if (key == "z") base.z = value;
        else
            throw UsageError("unknown parameter '" + std::string(key) +
                             "' (expected s, h, y, z)");
    }
    return base;
}

/// Parses "hmin:hmax:hsteps,zmin:zmax:zsteps" into a sweep grid.
[[nodiscard]] inline GridSpec parse_grid(std::string_view text) {
    const std::vector<std::string_view> axes = detail::split(text, ',');
    if (axes.size() != 2)
        throw UsageError("grid must be 'hmin:hmax:steps,zmin:zmax:steps'");
    GridSpec grid;
    for (int a = 0; a < 2; ++a) {
        const std::vector<std::string_view> f = detail::split(axes[a], ':');
        if (f.size() != 3)
            throw UsageError("grid axis must be 'min:max:steps', got '" +
                             std::string(axes[a]) + "'");
        const double lo = detail::parse_double(f[0], "grid min");
        const double hi = detail::parse_double(f[1], "grid max");
        const double steps_raw = detail::parse_double(f[2], "grid steps");
        const int steps = static_cast<int>(steps_raw);
        if (steps < 1 || static_cast<double>(steps) != steps_raw)
            throw UsageError("grid steps must be a positive integer");
        if (hi < lo) throw UsageError("grid max must be >= min");
        if (a == 0) {
            grid.h_min = lo;
            grid.h_max = hi;
            grid.h_steps = steps;
        } else {
            grid.z_min = lo;
            grid.z_max = hi;
            grid.z_steps = steps;
        }
    }
    return grid;
}

}  // namespace bandforge
