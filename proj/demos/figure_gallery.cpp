/// Renders the full gallery for one solid into a directory: the overhead
/// view, the six symmetry-distinct unfolding panels, a Wavefront OBJ of the
/// solid, and the machine-readable verdict report.
///
///   figure_gallery [output-dir] [preset]
///
/// defaults to ./gallery and the two-degree reference solid.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <bandforge.hpp>

namespace fs = std::filesystem;
using namespace bandforge;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw GeometryError("cannot write " + path.string());
    std::printf("  wrote %s\n", path.string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path dir = argc > 1 ? argv[1] : "gallery";
    const std::string name = argc > 2 ? argv[2] : "fig3";

    try {
        const Preset pre = preset(name);
        const Prismatoid solid = build_prismatoid(pre.params, pre.kind);
        fs::create_directories(dir);
        std::printf("gallery for %s -> %s\n", pre.name.c_str(), dir.string().c_str());

        write_file(dir / "overhead.svg", render_overhead_svg(solid));
        write_file(dir / "solid.obj", export_obj(solid));

        // One panel per symmetry class: cuts 0 (pushed midpoint) and 3
        // (corner), each with the three distinct attachment offsets.
        const Hexagon2 top = top_polygon(solid);
        for (const int cut : {0, 3}) {
            const Development dev = develop_band(solid, cut);
            for (int k = 3; k <= 5; ++k) {
                const int attach = (cut + k) % 6;
                const Placement placed = place_top(dev, top, attach);
                const OverlapResult hit = overlap(dev, placed);
                const std::string file =
                    "cut" + std::to_string(cut) + "_attach" + std::to_string(attach) +
                    ".svg";
                write_file(dir / file, render_unfolding_svg(dev, &placed, &hit));
            }
        }

        const VerdictMatrix matrix = verdict_matrix(solid);
        write_file(dir / "verdict.json",
                   to_text(verdict_report(matrix, reduce_by_symmetry(matrix),
                                          pre.name)));
        return 0;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const GeometryError& e) {
        std::fprintf(stderr, "geometry error: %s\n", e.what());
        return 3;
    }
}
