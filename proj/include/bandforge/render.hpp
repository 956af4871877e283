#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "bandforge/develop.hpp"
#include "bandforge/polygon.hpp"
#include "bandforge/prismatoid.hpp"

namespace bandforge {

/// Drawing parameters for the SVG emitters.  Sizes are fractions of the
/// drawing's larger bounding dimension, so figures look alike at any scale.
struct FigureStyle {
    std::string rim_color = "red";
    std::string attach_color = "blue";
    std::string band_fill = "#ececec";
    std::string band_stroke = "#555555";
    std::string hexagon_fill = "#bcd6ee";
    std::string hexagon_stroke = "#1f5fa8";
    std::string overlap_fill = "#ff8c00";
    std::string marker_color = "red";
    double stroke_width_frac = 0.004;
    double marker_radius_frac = 0.014;
    double margin_frac = 0.05;
};

namespace detail {

/// Fixed-format float for deterministic text output: 9 significant digits,
/// shortest form, no locale involvement, negative zero normalised.
[[nodiscard]] inline std::string fmt9(double v) {
    if (v == 0.0) v = 0.0;  // never emit "-0"
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// SVG's y axis points down; geometry's points up.  Flip at the door.
[[nodiscard]] constexpr Vec2 to_svg(Vec2 p) { return {p.x, -p.y}; }

struct SvgCanvas {
    std::string body;
    Box2 bounds{{0.0, 0.0}, {0.0, 0.0}};
    bool has_bounds = false;

    void see(Vec2 svg_pt) {
        if (!has_bounds) {
            bounds = {svg_pt, svg_pt};
            has_bounds = true;
        } else {
            bounds.expand(svg_pt);
        }
    }

    [[nodiscard]] std::string points_attr(std::span<const Vec2> pts) {
        std::string s;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec2 q = to_svg(pts[i]);
            see(q);
            if (i) s += ' ';
            s += fmt9(q.x) + ',' + fmt9(q.y);
        }
        return s;
    }

    void polygon(std::span<const Vec2> pts, const std::string& fill,
                 const std::string& stroke, const std::string& stroke_width,
                 const std::string& extra = {}) {
        body += "  <polygon points=\"" + points_attr(pts) + "\" fill=\"" + fill +
                "\" stroke=\"" + stroke + "\" stroke-width=\"" + stroke_width + "\"" +
                extra + "/>\n";
    }

    void polyline(std::span<const Vec2> pts, const std::string& stroke,
                  const std::string& stroke_width) {
        body += "  <polyline points=\"" + points_attr(pts) +
                "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                stroke_width + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    }

    void line(Vec2 a, Vec2 b, const std::string& stroke,
              const std::string& stroke_width) {
        const Vec2 p = to_svg(a), q = to_svg(b);
        see(p);
        see(q);
        body += "  <line x1=\"" + fmt9(p.x) + "\" y1=\"" + fmt9(p.y) + "\" x2=\"" +
                fmt9(q.x) + "\" y2=\"" + fmt9(q.y) + "\" stroke=\"" + stroke +
                "\" stroke-width=\"" + stroke_width + "\" stroke-linecap=\"round\"/>\n";
    }

    void circle(Vec2 center, double r, const std::string& stroke,
                const std::string& stroke_width) {
        const Vec2 c = to_svg(center);
        see({c.x - r, c.y - r});
        see({c.x + r, c.y + r});
        body += "  <circle cx=\"" + fmt9(c.x) + "\" cy=\"" + fmt9(c.y) + "\" r=\"" +
                fmt9(r) + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                stroke_width + "\"/>\n";
    }

    [[nodiscard]] std::string finish(double margin_frac) const {
        const double pad =
            margin_frac * std::max(bounds.width(), bounds.height());
        const double x = bounds.lo.x - pad;
        const double y = bounds.lo.y - pad;
        const double w = bounds.width() + 2.0 * pad;
        const double h = bounds.height() + 2.0 * pad;
        std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
                          fmt9(x) + ' ' + fmt9(y) + ' ' + fmt9(w) + ' ' + fmt9(h) +
                          "\">\n";
        svg += body;
        svg += "</svg>\n";
        return svg;
    }
};

}  // namespace detail

/// One development panel: the unrolled band, optionally the placed top
/// hexagon with its attachment edge in the accent colour, the overlap pieces
/// filled, and a marker circle on every overlap piece.  The rim polyline is
/// drawn last, in the rim colour, so it always reads on top.
[[nodiscard]] inline std::string render_unfolding_svg(
    const Development& dev, const Placement* placed = nullptr,
    const OverlapResult* hit = nullptr, const FigureStyle& style = {}) {
    // Scale strokes off the band's own extent so panels at any parameter
    // scale render with the same visual weight.
    Box2 extent = Box2::of(dev.rim);
    for (const Vec2 p : dev.bottom) extent.expand(p);
    if (placed)
        for (const Vec2 p : placed->hexagon) extent.expand(p);
    const double dim = std::max(extent.width(), extent.height());
    const std::string hairline = detail::fmt9(style.stroke_width_frac * dim);
    const std::string heavier = detail::fmt9(1.8 * style.stroke_width_frac * dim);
    const double marker_r = style.marker_radius_frac * dim;

    detail::SvgCanvas canvas;
    for (const auto& quad : dev.quads)
        canvas.polygon(quad, style.band_fill, style.band_stroke, hairline);
    if (placed) {
        canvas.polygon(placed->hexagon, style.hexagon_fill, style.hexagon_stroke,
                       hairline, " fill-opacity=\"0.55\"");
    }
    if (hit) {
        for (const auto& piece : hit->pieces)
            if (!piece.empty())
                canvas.polygon(piece, style.overlap_fill, "none", "0",
                               " fill-opacity=\"0.85\"");
    }
    canvas.polyline(dev.rim, style.rim_color, heavier);
    if (placed) {
        canvas.line(dev.rim[placed->offset], dev.rim[placed->offset + 1],
                    style.attach_color, heavier);
    }
    if (hit) {
        for (const auto& piece : hit->pieces)
            if (!piece.empty())
                canvas.circle(polygon_centroid(piece), marker_r, style.marker_color,
                              hairline);
    }
    return canvas.finish(style.margin_frac);
}

/// Overhead view of the solid: bottom hexagon, top hexagon nested inside it,
/// and the projected lateral edges joining paired vertices.
[[nodiscard]] inline std::string render_overhead_svg(const Prismatoid& p,
                                                     const FigureStyle& style = {}) {
    const Hexagon2 top = top_polygon(p);
    const Hexagon2 bottom = bottom_polygon(p);
    Box2 extent = Box2::of(top);
    for (const Vec2 q : bottom) extent.expand(q);
    const double dim = std::max(extent.width(), extent.height());
    const std::string hairline = detail::fmt9(style.stroke_width_frac * dim);
    const std::string heavier = detail::fmt9(1.8 * style.stroke_width_frac * dim);

    detail::SvgCanvas canvas;
    canvas.polygon(bottom, style.band_fill, style.band_stroke, heavier);
    canvas.polygon(top, style.hexagon_fill, style.hexagon_stroke, heavier,
                   " fill-opacity=\"0.55\"");
    for (int i = 0; i < 6; ++i)
        canvas.line(top[i], bottom[i], style.band_stroke, hairline);
    return canvas.finish(style.margin_frac);
}

/// Wavefront OBJ of the solid: twelve `v` lines (a0..a5 then b0..b5) and
/// eight `f` faces (top, bottom, six side quads), all wound counter-clockwise
/// seen from outside.
[[nodiscard]] inline std::string export_obj(const Prismatoid& p) {
    std::string obj;
    const auto vline = [&obj](const Vec3& v) {
        obj += "v " + detail::fmt9(v.x) + ' ' + detail::fmt9(v.y) + ' ' +
               detail::fmt9(v.z) + '\n';
    };
    for (const Vec3& v : p.a) vline(v);
    for (const Vec3& v : p.b) vline(v);
    obj += "f 1 2 3 4 5 6\n";        // top: +z normal, order as built
    obj += "f 12 11 10 9 8 7\n";     // bottom: -z normal, order reversed
    for (int i = 0; i < 6; ++i) {
        const int j = (i + 1) % 6;
        obj += "f " + std::to_string(1 + i) + ' ' + std::to_string(7 + i) + ' ' +
               std::to_string(7 + j) + ' ' + std::to_string(1 + j) + '\n';
    }
    return obj;
}

}  // namespace bandforge
