#pragma once

#include <json.hpp>

#include <numbers>
#include <string>

#include "bandforge/montecarlo.hpp"
#include "bandforge/prismatoid.hpp"
#include "bandforge/verifier.hpp"

namespace bandforge {

/// All machine-readable output uses nlohmann's ordered_json so keys serialise
/// in insertion order: reports are byte-stable across runs and round-trip
/// through parse + dump unchanged.
using Json = nlohmann::ordered_json;

[[nodiscard]] inline double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

[[nodiscard]] inline Json params_json(const PrismatoidParams& p) {
    return Json{{"s", p.s}, {"h", p.h}, {"y", p.y}, {"z", p.z}};
}

[[nodiscard]] inline Json vertices_json(const Prismatoid& p) {
    Json a = Json::array();
    Json b = Json::array();
    for (int i = 0; i < 6; ++i) {
        a.push_back(Json::array({p.a[i].x, p.a[i].y, p.a[i].z}));
        b.push_back(Json::array({p.b[i].x, p.b[i].y, p.b[i].z}));
    }
    return Json{{"top", std::move(a)}, {"bottom", std::move(b)}};
}

[[nodiscard]] inline const char* to_string(HexagonKind kind) {
    return kind == HexagonKind::bulged ? "bulged" : "regular";
}

[[nodiscard]] inline Json curvature_json(const CurvaturePair& c) {
    return Json{{"delta_rad", c.delta},
                {"epsilon_rad", c.epsilon},
                {"delta_deg", degrees(c.delta)},
                {"epsilon_deg", degrees(c.epsilon)},
                {"ratio", c.epsilon != 0.0 ? c.delta / c.epsilon : 0.0}};
}

[[nodiscard]] inline Json validation_json(const ValidationReport& rep) {
    Json j{{"ok", rep.ok()},
           {"top_convex", rep.top_convex},
           {"bottom_convex", rep.bottom_convex},
           {"hull_convex", rep.hull_convex},
           {"side_faces_planar", rep.side_faces_planar},
           {"side_edges_parallel", rep.side_edges_parallel},
           {"odd_angles_acute", rep.odd_angles_acute},
           {"even_angles_near_straight", rep.even_angles_near_straight},
           {"top_inside_bottom_shadow", rep.top_inside_bottom_shadow},
           {"strictly_nested", rep.strictly_nested},
           {"degenerate_flat", rep.degenerate_flat},
           {"degenerate_hexagon", rep.degenerate_hexagon}};
    j["notes"] = rep.notes;
    return j;
}

/// Full verdict report: parameters, curvatures, the 36-cell matrix, and the
/// symmetry classes.  `preset` may be empty.
[[nodiscard]] inline Json verdict_report(const VerdictMatrix& m,
                                         const std::vector<SymmetryClass>& classes,
                                         const std::string& preset = {}) {
    Json j;
    j["tool"] = "bandforge";
    j["schema"] = "verdict/1";
    if (!preset.empty()) j["preset"] = preset;
    j["hexagon"] = to_string(m.kind);
    j["params"] = params_json(m.params);
    j["curvature"] = curvature_json(m.curvature);
    j["top_area"] = m.top_area;
    j["tau"] = m.tau;
    j["counterexample"] = counterexample_verified(m);
    j["verdicts"] = Json{{"overlap", m.count(Verdict::overlap)},
                         {"clear", m.count(Verdict::clear)},
                         {"marginal", m.count(Verdict::marginal)}};
    Json cells = Json::array();
    for (const VerdictCell& c : m.cells) {
        cells.push_back(Json{{"cut", c.cut},
                             {"attach", c.attach},
                             {"offset", c.offset},
                             {"verdict", to_string(c.verdict)},
                             {"area", c.area}});
    }
    j["matrix"] = std::move(cells);
    Json cls = Json::array();
    for (const SymmetryClass& c : classes) {
        Json members = Json::array();
        for (const auto& [cut, attach] : c.members)
            members.push_back(Json::array({cut, attach}));
        cls.push_back(Json{{"label", c.label},
                           {"verdict", to_string(c.verdict)},
                           {"mean_area", c.mean_area},
                           {"max_rel_spread", c.max_rel_spread},
                           {"members", std::move(members)}});
    }
    j["classes"] = std::move(cls);
    return j;
}

/// Attaches a Monte Carlo cross-check to each matrix cell of a report
/// produced by verdict_report (verdict areas vs. sampled areas).
inline void attach_mc_check(Json& report, const Prismatoid& p, std::uint64_t samples,
                            std::uint64_t seed, const Tolerances& tol = {}) {
    const Hexagon2 top = top_polygon(p);
    std::size_t idx = 0;
    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut, tol);
        for (int attach = 0; attach < 6; ++attach, ++idx) {
            const Placement placed = place_top(dev, top, attach);
            double estimate = 0.0;
            double err = 0.0;
            for (int q = 0; q < 6; ++q) {
                const McArea mc =
                    mc_overlap_area(placed.hexagon, dev.quads[q], samples,
                                    seed + 6 * idx + static_cast<std::uint64_t>(q));
                estimate += mc.estimate;
                err += mc.std_error * mc.std_error;
            }
            report["matrix"][idx]["mc_area"] = estimate;
            report["matrix"][idx]["mc_std_error"] = std::sqrt(err);
        }
    }
    report["mc_samples_per_face"] = samples;
    report["mc_seed"] = seed;
}

[[nodiscard]] inline Json sweep_report(const SweepResult& sw) {
    Json j;
    j["tool"] = "bandforge";
    j["schema"] = "sweep/1";
    j["hexagon"] = to_string(sw.kind);
    j["s"] = sw.s;
    j["y"] = sw.y;
    j["grid"] = Json{{"h_min", sw.grid.h_min}, {"h_max", sw.grid.h_max},
                     {"h_steps", sw.grid.h_steps}, {"z_min", sw.grid.z_min},
                     {"z_max", sw.grid.z_max}, {"z_steps", sw.grid.z_steps}};
    j["counts"] = Json{{"all_overlap", sw.count(CellStatus::all_overlap)},
                       {"mixed", sw.count(CellStatus::mixed)},
                       {"all_clear", sw.count(CellStatus::all_clear)},
                       {"skipped", sw.count(CellStatus::skipped)}};
    Json cells = Json::array();
    for (const SweepCell& c : sw.cells) {
        Json cj{{"h", c.h}, {"z", c.z}, {"status", to_string(c.status)}};
        if (c.status == CellStatus::skipped) {
            cj["reason"] = c.reason;
        } else {
            cj["delta_rad"] = c.delta;
            cj["epsilon_rad"] = c.epsilon;
            cj["overlaps"] = c.overlaps;
            cj["clears"] = c.clears;
            cj["marginals"] = c.marginals;
            cj["weakest_area"] = c.weakest_area;
        }
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    return j;
}

/// Serialise with a trailing newline; the fixed indentation plus ordered keys
/// make repeated dumps byte-identical.
[[nodiscard]] inline std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bandforge
