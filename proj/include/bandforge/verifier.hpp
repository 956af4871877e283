#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bandforge/develop.hpp"
#include "bandforge/errors.hpp"
#include "bandforge/prismatoid.hpp"
#include "bandforge/tolerances.hpp"

namespace bandforge {

/// Three-way overlap verdict.  tau = area_factor * area(top hexagon) sets the
/// scale: obvious overlap above 10*tau, obvious clearance below tau/10, and a
/// marginal band in between that refuses to call either way.  A marginal cell
/// never certifies the counterexample.
enum class Verdict { overlap, clear, marginal };

[[nodiscard]] constexpr const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::overlap: return "OVERLAP";
        case Verdict::clear: return "CLEAR";
        default: return "MARGINAL";
    }
}

[[nodiscard]] inline Verdict classify_overlap(double area, double tau) {
    if (area > 10.0 * tau) return Verdict::overlap;
    if (area < 0.1 * tau) return Verdict::clear;
    return Verdict::marginal;
}

/// One (cut, attachment) combination.
struct VerdictCell {
    int cut = 0;
    int attach = 0;
    int offset = 0;  ///< (attach - cut) mod 6
    Verdict verdict = Verdict::marginal;
    double area = 0.0;
};

/// All 36 cut x attachment combinations for one solid.
struct VerdictMatrix {
    PrismatoidParams params;
    HexagonKind kind = HexagonKind::bulged;
    CurvaturePair curvature;
    double top_area = 0.0;
    double tau = 0.0;
    std::array<VerdictCell, 36> cells{};

    [[nodiscard]] const VerdictCell& at(int cut, int attach) const {
        return cells[6 * (((cut % 6) + 6) % 6) + (((attach % 6) + 6) % 6)];
    }
    [[nodiscard]] int count(Verdict v) const {
        return static_cast<int>(
            std::count_if(cells.begin(), cells.end(),
                          [v](const VerdictCell& c) { return c.verdict == v; }));
    }
};

/// Develops the band at every cut, attaches the top at every rim edge, and
/// measures each intersection.  Degenerate (flat) solids are rejected by the
/// development step; a structurally broken solid is rejected here.
[[nodiscard]] inline VerdictMatrix verdict_matrix(const Prismatoid& p,
                                                  const Tolerances& tol = {}) {
    if (const ValidationReport rep = validate(p, tol); !rep.ok())
        throw GeometryError("prismatoid failed structural validation");

    VerdictMatrix m;
    m.params = p.params;
    m.kind = p.kind;
    m.curvature = curvature_pair(p, tol);
    const Hexagon2 top = top_polygon(p);
    m.top_area = signed_area(top);
    m.tau = tol.area_factor() * m.top_area;

    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut, tol);
        for (int attach = 0; attach < 6; ++attach) {
            const Placement placed = place_top(dev, top, attach);
            const OverlapResult hit = overlap(dev, placed);
            m.cells[6 * cut + attach] = {cut, attach, placed.offset,
                                         classify_overlap(hit.total, m.tau),
                                         hit.total};
        }
    }
    return m;
}

/// True when every cell overlaps — no cut/attachment combination gives the
/// top polygon a collision-free landing.  Marginal cells fail the claim.
[[nodiscard]] inline bool counterexample_verified(const VerdictMatrix& m) {
    return std::all_of(m.cells.begin(), m.cells.end(), [](const VerdictCell& c) {
        return c.verdict == Verdict::overlap;
    });
}

/// Orbit of the verdict matrix under the solid's symmetries.  The 120-degree
/// rotation sends (cut, attach) to (cut+2, attach+2); the mirror sends it to
/// (-cut, -attach-1), i.e. offset m to 5-m.  The 36 cells fall into exactly
/// six orbits of six: {even, odd} cut parity x offset class {0,5}, {1,4},
/// {2,3}.
struct SymmetryClass {
    std::string label;
    int cut_parity = 0;     ///< 0: cut at a pushed midpoint, 1: cut at a corner
    int offset_class = 0;   ///< min(m, 5-m)
    Verdict verdict = Verdict::marginal;
    double mean_area = 0.0;
    double max_rel_spread = 0.0;
    std::vector<std::pair<int, int>> members;  ///< (cut, attach), sorted
};

[[nodiscard]] inline std::vector<SymmetryClass> reduce_by_symmetry(
    const VerdictMatrix& m, const Tolerances& tol = {}) {
    std::vector<SymmetryClass> classes;
    for (int parity = 0; parity < 2; ++parity) {
        for (int mc = 0; mc < 3; ++mc) {
            SymmetryClass cls;
            cls.cut_parity = parity;
            cls.offset_class = mc;
            cls.label = std::string(parity == 0 ? "midpoint-cut" : "corner-cut") + "/" +
                        (mc == 0 ? "adjacent" : mc == 1 ? "middle" : "opposite");
            for (int cut = parity; cut < 6; cut += 2)
                for (int offset : {mc, 5 - mc})
                    cls.members.emplace_back(cut, (cut + offset) % 6);
            std::sort(cls.members.begin(), cls.members.end());

            double lo = 0.0, hi = 0.0, sum = 0.0;
            bool first = true;
            for (const auto& [cut, attach] : cls.members) {
                const VerdictCell& cell = m.at(cut, attach);
                if (first) {
                    cls.verdict = cell.verdict;
                    lo = hi = cell.area;
                    first = false;
                } else {
                    if (cell.verdict != cls.verdict)
                        throw SymmetryViolation(
                            "verdicts differ inside symmetry class " + cls.label);
                    lo = std::min(lo, cell.area);
                    hi = std::max(hi, cell.area);
                }
                sum += cell.area;
            }
            cls.mean_area = sum / static_cast<double>(cls.members.size());
            const double scale = std::max(std::abs(hi), tol.area_factor() * m.top_area);
            cls.max_rel_spread = (hi - lo) / scale;
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Parameter-plane sweep
// ---------------------------------------------------------------------------

/// Inclusive linear grid over (h, z); a single step pins the value at min.
struct GridSpec {
    double h_min = 0.0, h_max = 0.0;
    int h_steps = 1;
    double z_min = 0.0, z_max = 0.0;
    int z_steps = 1;

    [[nodiscard]] double h_at(int i) const {
        return h_steps < 2 ? h_min
                           : h_min + (h_max - h_min) * static_cast<double>(i) /
                                         static_cast<double>(h_steps - 1);
    }
    [[nodiscard]] double z_at(int j) const {
        return z_steps < 2 ? z_min
                           : z_min + (z_max - z_min) * static_cast<double>(j) /
                                         static_cast<double>(z_steps - 1);
    }
};

enum class CellStatus { all_overlap, mixed, all_clear, skipped };

[[nodiscard]] constexpr const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::all_overlap: return "ALL_OVERLAP";
        case CellStatus::mixed: return "MIXED";
        case CellStatus::all_clear: return "ALL_CLEAR";
        default: return "SKIPPED";
    }
}

struct SweepCell {
    double h = 0.0;
    double z = 0.0;
    CellStatus status = CellStatus::skipped;
    std::string reason;           ///< set only for skipped cells
    double delta = 0.0;           ///< curvatures (evaluated cells)
    double epsilon = 0.0;
    double weakest_area = 0.0;    ///< smallest of the 36 overlap areas
    int overlaps = 0, clears = 0, marginals = 0;
};

struct SweepResult {
    GridSpec grid;
    double s = 1.0;
    double y = 0.5;
    HexagonKind kind = HexagonKind::bulged;
    std::vector<SweepCell> cells;  ///< row-major: h outer, z inner

    [[nodiscard]] int count(CellStatus st) const {
        return static_cast<int>(
            std::count_if(cells.begin(), cells.end(),
                          [st](const SweepCell& c) { return c.status == st; }));
    }
};

/// Evaluates the verdict matrix across the grid.  Cells whose parameters are
/// out of domain or degenerate (z below 1e-6 * s) are marked skipped with the
/// reason; everything else records the curvatures and the verdict census.
[[nodiscard]] inline SweepResult sweep(const GridSpec& grid, double s = 1.0,
                                       double y = 0.5,
                                       HexagonKind kind = HexagonKind::bulged,
                                       const Tolerances& tol = {}) {
    SweepResult out;
    out.grid = grid;
    out.s = s;
    out.y = y;
    out.kind = kind;
    out.cells.reserve(static_cast<std::size_t>(grid.h_steps) *
                      static_cast<std::size_t>(grid.z_steps));

    for (int i = 0; i < grid.h_steps; ++i) {
        for (int j = 0; j < grid.z_steps; ++j) {
            SweepCell cell;
            cell.h = grid.h_at(i);
            cell.z = grid.z_at(j);
            try {
                const Prismatoid p = build_prismatoid({s, cell.h, y, cell.z}, kind);
                const VerdictMatrix m = verdict_matrix(p, tol);
                cell.delta = m.curvature.delta;
                cell.epsilon = m.curvature.epsilon;
                cell.overlaps = m.count(Verdict::overlap);
                cell.clears = m.count(Verdict::clear);
                cell.marginals = m.count(Verdict::marginal);
                cell.weakest_area =
                    std::min_element(m.cells.begin(), m.cells.end(),
                                     [](const VerdictCell& a, const VerdictCell& b) {
                                         return a.area < b.area;
                                     })
                        ->area;
                cell.status = cell.overlaps == 36 ? CellStatus::all_overlap
                              : cell.clears == 36 ? CellStatus::all_clear
                                                  : CellStatus::mixed;
            } catch (const InvalidParams& e) {
                cell.status = CellStatus::skipped;
                cell.reason = e.what();
            } catch (const DegenerateGeometry& e) {
                cell.status = CellStatus::skipped;
                cell.reason = e.what();
            }
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace bandforge
