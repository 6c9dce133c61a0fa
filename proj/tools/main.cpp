// gsup: supports for hypergraphs defined by connected subgraphs of an
// embedded host graph.  Subcommands load a system file, run a check or a
// construction, and print a JSON report on stdout.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gsup/commands.hpp"

namespace {

int emit(const gsup::CommandOutcome& out) {
    std::cout << out.report.dump(2) << "\n";
    return out.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"supports, verifiers and solvers for embedded graph systems"};
    app.require_subcommand(1);

    std::string path, report_path, out_path, mode_str = "primal", kind_str = "set_cover";
    std::optional<std::string> dot_path;
    int k = 1, rows = 5, cols = 5, count = 4, k_count = 0;
    std::uint64_t seed = 0;
    gsup::PipelineOptions popt;

    auto add_pipeline_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", popt.step_budget, "rewrite step budget");
        cmd->add_flag("--audit", popt.audit, "re-verify cross-freeness after every rewrite");
    };

    auto* check = app.add_subcommand("check", "cross-free / non-piercing / genus report");
    check->add_option("file", path)->required();

    auto* primal = app.add_subcommand("primal", "construct a primal support");
    primal->add_option("file", path)->required();
    primal->add_option("--dot", dot_path, "write the support as DOT");
    add_pipeline_flags(primal);

    auto* dual = app.add_subcommand("dual", "construct a dual support");
    dual->add_option("file", path)->required();
    dual->add_option("--dot", dot_path, "write the support as DOT");
    add_pipeline_flags(dual);

    auto* inter = app.add_subcommand("intersection", "construct an intersection support");
    inter->add_option("file", path)->required();
    inter->add_option("--dot", dot_path, "write the support as DOT");
    add_pipeline_flags(inter);

    auto* verify = app.add_subcommand("verify", "verify a support report against a system");
    verify->add_option("file", path)->required();
    verify->add_option("report", report_path)->required();

    auto* color = app.add_subcommand("color", "construct a support and color the hypergraph");
    color->add_option("file", path)->required();
    color->add_option("--mode", mode_str, "primal | dual | intersection");
    add_pipeline_flags(color);

    auto* solve = app.add_subcommand("solve", "local-search packing/covering solver");
    solve->add_option("file", path)->required();
    solve->add_option("--kind", kind_str,
                      "set_cover | hitting_set | generalized_cover | capacitated_packing | "
                      "dominating_set | independent_set");
    solve->add_option("--mode", mode_str, "hypergraph to extract");
    solve->add_option("--k", k, "swap radius");
    solve->add_option("--seed", seed)->required();

    auto* gen = app.add_subcommand("gen", "generate a random rectangle system");
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--count", count, "number of H rectangles");
    gen->add_option("--k-count", k_count, "number of K rectangles");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--out", out_path)->required();

    auto* fromgrid = app.add_subcommand("from-grid", "expand a grid shorthand file");
    fromgrid->add_option("file", path)->required();
    fromgrid->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return emit(gsup::cmd_check(path));
    if (primal->parsed())
        return emit(gsup::cmd_support(path, gsup::SupportMode::primal, popt, dot_path));
    if (dual->parsed())
        return emit(gsup::cmd_support(path, gsup::SupportMode::dual, popt, dot_path));
    if (inter->parsed())
        return emit(gsup::cmd_support(path, gsup::SupportMode::intersection, popt, dot_path));
    if (verify->parsed()) return emit(gsup::cmd_verify(path, report_path));
    if (color->parsed()) {
        try {
            return emit(gsup::cmd_color(path, gsup::parse_mode(mode_str), popt));
        } catch (const gsup::ParseError& e) {
            std::cerr << e.what() << "\n";
            return gsup::exit_input_error;
        }
    }
    if (solve->parsed()) {
        try {
            return emit(gsup::cmd_solve(path, gsup::parse_kind(kind_str),
                                        gsup::parse_mode(mode_str), k, seed));
        } catch (const gsup::ParseError& e) {
            std::cerr << e.what() << "\n";
            return gsup::exit_input_error;
        }
    }
    if (gen->parsed()) return emit(gsup::cmd_gen(rows, cols, count, k_count, seed, out_path));
    if (fromgrid->parsed())
        return emit(gsup::cmd_from_grid(
            path, out_path.empty() ? std::nullopt : std::optional<std::string>(out_path)));
    return 1;
}
