// bandforge command-line interface.
//
// Subcommands: build | validate | curvature | solve | unfold | verify |
//              sweep | render | export
//
// Exit codes: 0 on success (for `verify`: the no-free-landing claim holds),
//             1 when `verify` finds a clear or marginal cell,
//             2 on usage errors,
//             3 on geometry errors (bad domain, degenerate solid, ...).

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <bandforge.hpp>

namespace {

using namespace bandforge;

struct GeometrySelection {
    std::string preset_name;
    std::string params_text;
    std::string hexagon = "bulged";
};

void add_geometry_flags(CLI::App* cmd, GeometrySelection& sel) {
    auto* preset_opt =
        cmd->add_option("--preset", sel.preset_name, "Named configuration: fig1b or fig3");
    auto* params_opt = cmd->add_option("--params", sel.params_text,
                                       "Explicit parameters, e.g. s=1,h=0.05,y=0.5,z=0.1");
    cmd->add_option("--hexagon", sel.hexagon,
                    "Top polygon kind: bulged (default) or regular")
        ->check(CLI::IsMember({"bulged", "regular"}));
    preset_opt->excludes(params_opt);
    params_opt->excludes(preset_opt);
}

[[nodiscard]] HexagonKind parse_kind(const std::string& name) {
    return name == "regular" ? HexagonKind::regular : HexagonKind::bulged;
}

struct ResolvedGeometry {
    Prismatoid prism;
    std::string preset_name;  ///< empty when built from explicit parameters
};

[[nodiscard]] ResolvedGeometry resolve_geometry(const GeometrySelection& sel,
                                                const Tolerances& tol) {
    if (!sel.preset_name.empty()) {
        if (sel.hexagon != "bulged")
            throw UsageError("--hexagon cannot override a preset's hexagon kind");
        const Preset p = preset(sel.preset_name, tol);
        return {build_prismatoid(p.params, p.kind), p.name};
    }
    if (sel.params_text.empty())
        throw UsageError("specify exactly one of --preset or --params");
    return {build_prismatoid(parse_params(sel.params_text), parse_kind(sel.hexagon)), ""};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw UsageError("failed writing '" + path + "'");
}

[[nodiscard]] Json geometry_header(const ResolvedGeometry& g, const char* schema) {
    Json j;
    j["tool"] = "bandforge";
    j["schema"] = schema;
    if (!g.preset_name.empty()) j["preset"] = g.preset_name;
    j["hexagon"] = to_string(g.prism.kind);
    j["params"] = params_json(g.prism.params);
    return j;
}

[[nodiscard]] int run_build(const GeometrySelection& sel, const std::string& out_path,
                            const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    Json j = geometry_header(g, "prismatoid/1");
    j["vertices"] = vertices_json(g.prism);
    j["validation"] = validation_json(validate(g.prism, tol));
    j["curvature"] = curvature_json(curvature_pair(g.prism, tol));
    write_output(out_path, to_text(j));
    return 0;
}

[[nodiscard]] int run_validate(const GeometrySelection& sel, const std::string& out_path,
                               const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    Json j = geometry_header(g, "validation/1");
    j["validation"] = validation_json(validate(g.prism, tol));
    write_output(out_path, to_text(j));
    return 0;
}

[[nodiscard]] int run_curvature(const GeometrySelection& sel, const std::string& out_path,
                                const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    Json j = geometry_header(g, "curvature/1");
    Json top = Json::array();
    Json bottom = Json::array();
    double total = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double kt = vertex_curvature(g.prism, Face::top, i);
        const double kb = vertex_curvature(g.prism, Face::bottom, i);
        top.push_back(kt);
        bottom.push_back(kb);
        total += kt + kb;
    }
    j["per_vertex"] = Json{{"top", std::move(top)}, {"bottom", std::move(bottom)}};
    j["total"] = total;
    j["total_minus_4pi"] = total - 4.0 * std::numbers::pi;
    j["curvature"] = curvature_json(curvature_pair(g.prism, tol));
    write_output(out_path, to_text(j));
    return 0;
}

[[nodiscard]] int run_solve(double eps_deg, double ratio, double s, double y,
                            const std::string& out_path, const Tolerances& tol) {
    const double eps_rad = eps_deg * std::numbers::pi / 180.0;
    const SolveResult sol = solve_params(eps_rad, ratio, s, y, tol);
    Json j;
    j["tool"] = "bandforge";
    j["schema"] = "solve/1";
    j["target"] = Json{{"epsilon_rad", eps_rad},
                       {"epsilon_deg", eps_deg},
                       {"ratio", ratio}};
    j["s"] = s;
    j["y"] = y;
    j["h"] = sol.h;
    j["z"] = sol.z;
    j["achieved"] = curvature_json(sol.achieved);
    j["residuals"] = Json{{"epsilon_rad", sol.achieved.epsilon - eps_rad},
                          {"delta_rad", sol.achieved.delta - ratio * eps_rad}};
    write_output(out_path, to_text(j));
    return 0;
}

[[nodiscard]] int run_unfold(const GeometrySelection& sel, int cut, int attach,
                             const std::string& out_path, const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    const Development dev = develop_band(g.prism, cut, tol);
    if (attach < 0) {
        write_output(out_path, render_unfolding_svg(dev));
        return 0;
    }
    const Placement placed = place_top(dev, top_polygon(g.prism), attach);
    const OverlapResult hit = overlap(dev, placed);
    write_output(out_path, render_unfolding_svg(dev, &placed, &hit));
    return 0;
}

[[nodiscard]] int run_verify(const GeometrySelection& sel, const std::string& out_path,
                             bool mc_check, std::uint64_t mc_samples, std::uint64_t seed,
                             const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    const VerdictMatrix m = verdict_matrix(g.prism, tol);
    const std::vector<SymmetryClass> classes = reduce_by_symmetry(m, tol);
    Json j = verdict_report(m, classes, g.preset_name);
    if (mc_check) attach_mc_check(j, g.prism, mc_samples, seed, tol);
    write_output(out_path, to_text(j));
    const bool verified = counterexample_verified(m);
    std::cerr << (verified ? "verified: every cut/attachment combination overlaps"
                           : "refuted: some combination is clear or marginal")
              << " (overlap " << m.count(Verdict::overlap) << ", clear "
              << m.count(Verdict::clear) << ", marginal "
              << m.count(Verdict::marginal) << ")\n";
    return verified ? 0 : 1;
}

[[nodiscard]] int run_sweep(const std::string& grid_text, const std::string& params_text,
                            const std::string& hexagon, const std::string& out_path,
                            const Tolerances& tol) {
    const GridSpec grid = parse_grid(grid_text);
    PrismatoidParams base{1.0, 0.0, 0.5, 0.0};
    if (!params_text.empty()) base = parse_params(params_text, base);
    const SweepResult sw = sweep(grid, base.s, base.y, parse_kind(hexagon), tol);
    write_output(out_path, to_text(sweep_report(sw)));
    return 0;
}

[[nodiscard]] int run_render(const GeometrySelection& sel, const std::string& out_dir,
                             const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    write_output((dir / "overhead.svg").string(), render_overhead_svg(g.prism));

    // The two canonical cuts — a midpoint vertex (0) and a corner vertex (3) —
    // each with the three attachment edges on the far side of the hexagon:
    // together one representative per symmetry class.
    const Hexagon2 top = top_polygon(g.prism);
    for (const int cut : {0, 3}) {
        const Development dev = develop_band(g.prism, cut, tol);
        for (int k = 3; k < 6; ++k) {
            const int attach = (cut + k) % 6;
            const Placement placed = place_top(dev, top, attach);
            const OverlapResult hit = overlap(dev, placed);
            const std::string name = "cut" + std::to_string(cut) + "_attach" +
                                     std::to_string(attach) + ".svg";
            write_output((dir / name).string(),
                         render_unfolding_svg(dev, &placed, &hit));
        }
    }
    return 0;
}

[[nodiscard]] int run_export(const GeometrySelection& sel, const std::string& out_path,
                             const Tolerances& tol) {
    const ResolvedGeometry g = resolve_geometry(sel, tol);
    write_output(out_path, export_obj(g.prism));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandforge: build a nearly flat convex prismatoid, unfold its side "
                 "band, and certify that the top face overlaps every attachment"};
    app.require_subcommand(1);

    const Tolerances tol = Tolerances::from_env();

    GeometrySelection sel;
    std::string out_path;
    std::string grid_text;
    std::string sweep_params;
    std::string sweep_hexagon = "bulged";
    int cut = 0;
    int attach = -1;
    double eps_deg = 0.0;
    double ratio = 0.5;
    double solve_s = 1.0;
    double solve_y = 0.5;
    bool mc_check = false;
    std::uint64_t mc_samples = 100000;
    std::uint64_t seed = 1;

    CLI::App* cmd_build = app.add_subcommand("build", "Construct the solid and report it");
    add_geometry_flags(cmd_build, sel);
    cmd_build->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "Structural soundness report");
    add_geometry_flags(cmd_validate, sel);
    cmd_validate->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_curvature =
        app.add_subcommand("curvature", "Vertex curvatures and the (delta, epsilon) pair");
    add_geometry_flags(cmd_curvature, sel);
    cmd_curvature->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_solve = app.add_subcommand(
        "solve", "Find (h, z) hitting curvature targets epsilon and delta = ratio*epsilon");
    cmd_solve->add_option("--eps-deg", eps_deg, "Target epsilon in degrees")->required();
    cmd_solve->add_option("--ratio", ratio, "Target delta/epsilon ratio (default 0.5)");
    cmd_solve->add_option("--s", solve_s, "Hexagon scale (default 1)");
    cmd_solve->add_option("--y", solve_y, "Band offset (default 0.5)");
    cmd_solve->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_unfold =
        app.add_subcommand("unfold", "Develop the band at one cut into an SVG");
    add_geometry_flags(cmd_unfold, sel);
    cmd_unfold->add_option("--cut", cut, "Lateral edge to cut, 0..5")
        ->required()
        ->check(CLI::Range(0, 5));
    cmd_unfold->add_option("--attach", attach, "Also place the top at this edge, 0..5")
        ->check(CLI::Range(0, 5));
    cmd_unfold->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Check all 36 cut/attachment combinations for overlap");
    add_geometry_flags(cmd_verify, sel);
    cmd_verify->add_option("--out", out_path, "Report file (default: stdout)");
    cmd_verify->add_flag("--mc-check", mc_check,
                         "Cross-check every overlap area by Monte Carlo sampling");
    cmd_verify->add_option("--mc-samples", mc_samples,
                           "Samples per face for --mc-check (default 100000)");
    cmd_verify->add_option("--seed", seed, "Random seed for --mc-check (default 1)");

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Map verdicts across an (h, z) grid");
    cmd_sweep->add_option("--grid", grid_text, "hmin:hmax:steps,zmin:zmax:steps")
        ->required();
    cmd_sweep->add_option("--params", sweep_params,
                          "Fixed s and y (default s=1,y=0.5); h and z come from the grid");
    cmd_sweep->add_option("--hexagon", sweep_hexagon,
                          "Top polygon kind: bulged (default) or regular")
        ->check(CLI::IsMember({"bulged", "regular"}));
    cmd_sweep->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* cmd_render = app.add_subcommand(
        "render", "Emit the overhead view and the six canonical development panels");
    add_geometry_flags(cmd_render, sel);
    cmd_render->add_option("--out", out_path, "Output directory")->required();

    CLI::App* cmd_export = app.add_subcommand("export", "Wavefront OBJ of the solid");
    add_geometry_flags(cmd_export, sel);
    cmd_export->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_build->parsed()) return run_build(sel, out_path, tol);
        if (cmd_validate->parsed()) return run_validate(sel, out_path, tol);
        if (cmd_curvature->parsed()) return run_curvature(sel, out_path, tol);
        if (cmd_solve->parsed())
            return run_solve(eps_deg, ratio, solve_s, solve_y, out_path, tol);
        if (cmd_unfold->parsed()) return run_unfold(sel, cut, attach, out_path, tol);
        if (cmd_verify->parsed())
            return run_verify(sel, out_path, mc_check, mc_samples, seed, tol);
        if (cmd_sweep->parsed())
            return run_sweep(grid_text, sweep_params, sweep_hexagon, out_path, tol);
        if (cmd_render->parsed()) return run_render(sel, out_path, tol);
        if (cmd_export->parsed()) return run_export(sel, out_path, tol);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
