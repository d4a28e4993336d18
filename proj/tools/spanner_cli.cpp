// spanner: build and verify degree-3 plane spanners, and scan the certified
// bound functions. Subcommands compose over stdin/stdout JSON when -i/-o are
// omitted, e.g.
//   spanner gen --kind regular-ngon --n 23 | spanner build convex \
//     | spanner verify --expect-degree 3 --expect-stretch 5.1888
// Exit codes: 0 success, 1 bad input, 2 failed verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "deg3span/bounds.hpp"
#include "deg3span/convex_spanner.hpp"
#include "deg3span/errors.hpp"
#include "deg3span/generate.hpp"
#include "deg3span/grid_spanner.hpp"
#include "deg3span/json_io.hpp"
#include "deg3span/steiner.hpp"
#include "deg3span/svg.hpp"
#include "deg3span/verifier.hpp"

namespace {

using deg3span::json;

json read_input(const std::string& path) {
    if (path.empty()) return deg3span::parse_json(std::cin);
    std::ifstream in(path);
    if (!in) throw deg3span::input_error("cannot open input file: " + path);
    return deg3span::parse_json(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw deg3span::input_error("cannot open output file: " + path);
    out << text;
}

void write_json(const std::string& path, const json& j) { write_output(path, j.dump() + "\n"); }

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("SPANNER_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw deg3span::input_error("SPANNER_SEED is not a valid unsigned integer");
        }
    }
    return cli_seed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-3 plane spanner construction and verification"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point set or grid instance");
    std::string gen_kind = "convex-random";
    int gen_n = 8, gen_rows = 3, gen_cols = 3;
    std::uint64_t gen_seed = 0;
    double gen_scale = 1.0;
    std::string gen_out;
    gen->add_option("--kind", gen_kind,
                    "convex-random | regular-ngon | symmetric-convex | grid | general-random");
    gen->add_option("--n", gen_n, "point count");
    gen->add_option("--rows", gen_rows, "grid rows");
    gen->add_option("--cols", gen_cols, "grid columns");
    gen->add_option("--seed", gen_seed, "RNG seed (SPANNER_SEED overrides)");
    gen->add_option("--scale", gen_scale, "geometry scale");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // build convex | build grid
    auto* build = app.add_subcommand("build", "build a spanner");
    build->require_subcommand(1);
    auto* build_convex = build->add_subcommand("convex", "spanner of a convex-position point set");
    auto* build_grid = build->add_subcommand("grid", "spanner of a rectangular grid");
    std::string bc_in, bc_out, bg_in, bg_out;
    build_convex->add_option("-i,--input", bc_in, "points JSON (default stdin)");
    build_convex->add_option("-o,--output", bc_out, "graph JSON (default stdout)");
    build_grid->add_option("-i,--input", bg_in, "grid JSON (default stdin)");
    build_grid->add_option("-o,--output", bg_out, "graph JSON (default stdout)");

    // augment steiner
    auto* augment = app.add_subcommand("augment", "degree-reducing transformations");
    augment->require_subcommand(1);
    auto* steiner = augment->add_subcommand("steiner", "replace vertices by Steiner circles");
    double st_epsilon = 0.1;
    std::string st_in, st_out;
    steiner->add_option("--epsilon", st_epsilon, "stretch slack budget (> 0)")->required();
    steiner->add_option("-i,--input", st_in, "graph JSON (default stdin)");
    steiner->add_option("-o,--output", st_out, "graph JSON (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "report degree, planarity, and stretch");
    std::string v_in, v_out;
    double v_expect_stretch = 0.0;
    int v_expect_degree = 0;
    bool v_restrict = false;
    verify->add_option("-i,--input", v_in, "graph JSON (default stdin)");
    verify->add_option("-o,--output", v_out, "report JSON (default stdout)");
    auto* v_str_opt = verify->add_option("--expect-stretch", v_expect_stretch,
                                         "fail (exit 2) if stretch exceeds this");
    auto* v_deg_opt = verify->add_option("--expect-degree", v_expect_degree,
                                         "fail (exit 2) if max degree exceeds this");
    verify->add_flag("--restrict-original", v_restrict,
                     "measure stretch over non-Steiner vertex pairs only");

    // render
    auto* render = app.add_subcommand("render", "render points, a grid, or a graph as SVG");
    std::string r_in, r_out;
    bool r_built = false;
    render->add_option("-i,--input", r_in, "payload JSON (default stdin)");
    render->add_option("-o,--output", r_out, "SVG file (default stdout)");
    render->add_flag("--built", r_built, "for grids: render the constructed spanner");

    // bounds scan
    auto* bounds = app.add_subcommand("bounds", "certified bound functions");
    bounds->require_subcommand(1);
    auto* scan = bounds->add_subcommand("scan", "grid-scan a bound function maximum");
    std::string sc_function;
    int sc_steps = 2000;
    std::string sc_out;
    scan->add_option("--function", sc_function, "f | g")->required();
    scan->add_option("--steps", sc_steps, "grid resolution per axis");
    scan->add_option("-o,--output", sc_out, "verdict JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) {
            deg3span::InstanceSpec spec;
            spec.kind = deg3span::parse_kind(gen_kind);
            spec.n = gen_n;
            spec.rows = gen_rows;
            spec.cols = gen_cols;
            spec.seed = effective_seed(gen_seed);
            spec.scale = gen_scale;
            deg3span::Instance inst = deg3span::generate(spec);
            if (std::holds_alternative<deg3span::PointSet>(inst))
                write_json(gen_out, deg3span::write_points(std::get<deg3span::PointSet>(inst)));
            else
                write_json(gen_out, deg3span::write_grid(std::get<deg3span::Grid>(inst)));
            return 0;
        }
        if (build_convex->parsed()) {
            deg3span::PointSet pts = deg3span::read_points(read_input(bc_in));
            deg3span::ConvexSpanner sp = deg3span::build_convex_spanner(pts);
            write_json(bc_out, deg3span::write_graph(sp.graph));
            return 0;
        }
        if (build_grid->parsed()) {
            deg3span::Grid grid = deg3span::read_grid(read_input(bg_in));
            write_json(bg_out, deg3span::write_graph(deg3span::build_grid_spanner(grid)));
            return 0;
        }
        if (steiner->parsed()) {
            deg3span::GeometricGraph g = deg3span::read_graph(read_input(st_in));
            write_json(st_out, deg3span::write_graph(deg3span::augment_to_degree3(g, st_epsilon)));
            return 0;
        }
        if (verify->parsed()) {
            deg3span::GeometricGraph g = deg3span::read_graph(read_input(v_in));
            deg3span::SpannerReport rep = deg3span::verify(g, v_restrict);
            write_json(v_out, deg3span::write_report(rep));
            bool ok = rep.is_plane && rep.connected;
            if (!v_str_opt->empty() && (!rep.connected || rep.stretch > v_expect_stretch + 1e-9))
                ok = false;
            if (!v_deg_opt->empty() && rep.max_degree > v_expect_degree) ok = false;
            return ok ? 0 : 2;
        }
        if (render->parsed()) {
            json payload = read_input(r_in);
            switch (deg3span::detect_payload(payload)) {
                case deg3span::PayloadKind::Points:
                    write_output(r_out, deg3span::render_points_svg(deg3span::read_points(payload)));
                    break;
                case deg3span::PayloadKind::GridPayload:
                    write_output(r_out,
                                 deg3span::render_grid_svg(deg3span::read_grid(payload), r_built));
                    break;
                case deg3span::PayloadKind::Graph:
                    write_output(r_out, deg3span::render_graph_svg(deg3span::read_graph(payload)));
                    break;
            }
            return 0;
        }
        if (scan->parsed()) {
            deg3span::BoundDomain dom;
            if (sc_function == "f")
                dom = deg3span::domain_f(sc_steps);
            else if (sc_function == "g")
                dom = deg3span::domain_g(sc_steps);
            else
                throw deg3span::input_error("--function must be f or g");
            deg3span::ScanResult res = deg3span::scan_max(dom);
            json out{{"function", sc_function},
                     {"steps", sc_steps},
                     {"max", res.max_value},
                     {"argmax", json::array({res.arg_x, res.arg_alpha})},
                     {"bound", res.bound},
                     {"satisfied", res.satisfied}};
            write_json(sc_out, out);
            return res.satisfied ? 0 : 2;
        }
    } catch (const deg3span::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
