#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "bandforge/polygon.hpp"

namespace bandforge {

/// SplitMix64 generator (Steele, Lea & Flood).  Tiny, fast, and fully
/// deterministic across platforms — every stochastic check in the library
/// seeds one of these so results are reproducible bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    constexpr std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    constexpr double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }
};

/// Monte Carlo intersection-area estimate with its standard error.
struct McArea {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Estimates the intersection area of two convex counter-clockwise polygons
/// by uniform sampling over the intersection of their bounding boxes.  This
/// deliberately shares no code with convex_clip (only the half-plane
/// point-in test), so the two can serve as independent cross-checks.  If the
/// bounding boxes do not meet, the intersection is empty and the estimate is
/// an exact zero.
[[nodiscard]] inline McArea mc_overlap_area(std::span<const Vec2> p, std::span<const Vec2> q,
                                            std::uint64_t samples, std::uint64_t seed) {
    McArea result;
    result.samples = samples;
    const Box2 window = Box2::meet(Box2::of(p), Box2::of(q));
    if (window.empty() || samples == 0) return result;

    SplitMix64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Vec2 pt{rng.uniform(window.lo.x, window.hi.x),
                      rng.uniform(window.lo.y, window.hi.y)};
        if (point_in_convex(pt, p) && point_in_convex(pt, q)) ++hits;
    }
    const double box_area = window.area();
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    result.hits = hits;
    result.estimate = box_area * frac;
    result.std_error =
        box_area * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return result;
}

}  // namespace bandforge
