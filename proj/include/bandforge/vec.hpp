#pragma once

#include <algorithm>
#include <cmath>

namespace bandforge {

/// Plane vector / point.  All 2-D geometry in the library uses a right-handed
/// frame (x right, y up) with counter-clockwise polygons.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
    constexpr Vec2 operator/(double k) const { return {x / k, y / k}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double k, Vec2 v) { return v * k; }

[[nodiscard]] constexpr double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }
/// z-component of the 3-D cross product of (u, 0) and (v, 0); positive when v
/// lies counter-clockwise of u.
[[nodiscard]] constexpr double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
[[nodiscard]] inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
[[nodiscard]] inline double distance(Vec2 p, Vec2 q) { return norm(q - p); }
[[nodiscard]] inline Vec2 normalized(Vec2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}
/// v rotated a quarter turn counter-clockwise.
[[nodiscard]] constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Space vector / point.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
    constexpr Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double k, Vec3 v) { return v * k; }

[[nodiscard]] constexpr double dot(Vec3 u, Vec3 v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}
[[nodiscard]] constexpr Vec3 cross(Vec3 u, Vec3 v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
[[nodiscard]] inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
[[nodiscard]] inline double distance(Vec3 p, Vec3 q) { return norm(q - p); }
[[nodiscard]] inline Vec3 normalized(Vec3 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Unsigned angle between two nonzero vectors, in [0, pi].
template <class V>
[[nodiscard]] double angle_between(V u, V v) {
    const double c = dot(u, v) / (norm(u) * norm(v));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace bandforge
