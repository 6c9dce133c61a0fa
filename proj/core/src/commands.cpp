#include "gsup/commands.hpp"

#include <fstream>
#include <functional>

#include "gsup/io.hpp"

namespace gsup {

using nlohmann::json;

namespace {

json witness_json(const GraphSystem& sys, const CrossingWitness& w) {
    json j;
    j["family_a"] = w.family_a;
    j["family_b"] = w.family_b;
    j["vertex"] = sys.name_of(w.at);
    j["darts"] = w.darts;
    json nbrs = json::array();
    for (VertexId v : w.reduced_neighbors) nbrs.push_back(v);
    j["reduced_neighbors"] = nbrs;
    j["essential_intersection"] = w.essential_intersection;
    return j;
}

SupportGraph support_as_named_graph(const SupportResult& res) {
    SupportGraph g;
    for (const auto& [v, name] : res.vertex_meaning) g.add_vertex(name);
    for (auto [d, t] : res.support.edges())
        g.add_edge(res.vertex_meaning.at(res.support.dart_vertex(d)),
                   res.vertex_meaning.at(res.support.dart_vertex(t)));
    return g;
}

json support_json(const SupportResult& res) {
    json j;
    json edges = json::array();
    for (auto [d, t] : res.support.edges())
        edges.push_back({res.vertex_meaning.at(res.support.dart_vertex(d)),
                         res.vertex_meaning.at(res.support.dart_vertex(t))});
    json verts = json::array();
    for (const auto& [_, name] : res.vertex_meaning) verts.push_back(name);
    j["vertices"] = verts;
    j["edges"] = edges;
    j["genus"] = res.certified_genus;
    j["empty_warning"] = res.empty_warning;
    json log = json::array();
    std::map<std::string, int> counts;
    for (const auto& s : res.log) counts[s.kind]++;
    for (const auto& [k, c] : counts) log.push_back({{"kind", k}, {"count", c}});
    j["rewrites"] = log;
    j["rewrite_steps"] = res.log.size();
    return j;
}

std::string mode_name(SupportMode m) {
    switch (m) {
    case SupportMode::primal: return "primal";
    case SupportMode::dual: return "dual";
    case SupportMode::intersection: return "intersection";
    }
    return "?";
}

GraphSystem load_for_mode(const std::string& path, SupportMode mode) {
    GraphSystem sys = load_system_file(path);
    if (mode == SupportMode::primal && !sys.has_coloring()) {
        // terminals default to the whole vertex set
        for (VertexId v : sys.host.vertices()) sys.coloring[v] = Color::blue;
    }
    return sys;
}

} // namespace

SupportMode parse_mode(const std::string& s) {
    if (s == "primal") return SupportMode::primal;
    if (s == "dual") return SupportMode::dual;
    if (s == "intersection") return SupportMode::intersection;
    throw ParseError("unknown mode '" + s + "'");
}

ProblemKind parse_kind(const std::string& s) {
    if (s == "set_cover") return ProblemKind::set_cover;
    if (s == "hitting_set") return ProblemKind::hitting_set;
    if (s == "generalized_cover") return ProblemKind::generalized_cover;
    if (s == "capacitated_packing") return ProblemKind::capacitated_packing;
    if (s == "dominating_set") return ProblemKind::dominating_set;
    if (s == "independent_set") return ProblemKind::independent_set;
    throw ParseError("unknown problem kind '" + s + "'");
}

CommandOutcome run_guarded(const std::string& command,
                           const std::function<json()>& body) {
    CommandOutcome out;
    out.report["command"] = command;
    try {
        json r = body();
        for (auto& [k, v] : r.items()) out.report[k] = v;
        out.report["ok"] = true;
        out.exit_code = exit_ok;
    } catch (const ContractViolation& e) {
        out.report["ok"] = false;
        out.report["error"] = {{"kind", "contract_violation"}, {"message", e.what()}};
        out.exit_code = exit_contract_violation;
    } catch (const BudgetExhausted& e) {
        out.report["ok"] = false;
        out.report["error"] = {{"kind", "budget_exhausted"}, {"message", e.what()}};
        out.exit_code = exit_budget;
    } catch (const std::exception& e) { // parse + structural + size guard
        out.report["ok"] = false;
        out.report["error"] = {{"kind", "input_error"}, {"message", e.what()}};
        out.exit_code = exit_input_error;
    }
    return out;
}

CommandOutcome cmd_check(const std::string& path) {
    return run_guarded("check", [&]() {
        GraphSystem sys = load_system_file(path);
        json j;
        auto cw = find_crossing(sys);
        j["cross_free"] = {{"value", !cw.has_value()}};
        if (cw) j["cross_free"]["witness"] = witness_json(sys, *cw);
        auto pw = find_piercing(sys);
        j["non_piercing"] = {{"value", !pw.has_value()}};
        if (pw) {
            json w;
            w["family_a"] = pw->family_a;
            w["family_b"] = pw->family_b;
            json comps = json::array();
            for (const auto& comp : pw->components) {
                json c = json::array();
                for (VertexId v : comp) c.push_back(sys.name_of(v));
                comps.push_back(c);
            }
            w["components"] = comps;
            j["non_piercing"]["witness"] = w;
        }
        j["genus"] = sys.host.genus();
        j["vertices"] = sys.host.vertex_count();
        j["edges"] = sys.host.edge_count();
        return j;
    });
}

CommandOutcome cmd_support(const std::string& path, SupportMode mode, const PipelineOptions& opt,
                           const std::optional<std::string>& dot_path) {
    return run_guarded(mode_name(mode), [&]() {
        GraphSystem sys = load_for_mode(path, mode);
        SupportResult res;
        json j;
        switch (mode) {
        case SupportMode::primal: res = primal_support(sys, opt); break;
        case SupportMode::dual: {
            auto [r, cert] = dual_support(sys, opt);
            res = std::move(r);
            json ce = json::array();
            for (const auto& e : cert.edges)
                ce.push_back({{"edge", {sys.name_of(e.u), sys.name_of(e.v)}},
                              {"support_edge", {e.member_u, e.member_v}}});
            j["special_edges"] = ce;
            break;
        }
        case SupportMode::intersection: res = intersection_support(sys, opt); break;
        }
        j["mode"] = mode_name(mode);
        j["support"] = support_json(res);

        Hypergraph hg = extract_hypergraph(sys, mode);
        j["verified"] = is_support(support_as_named_graph(res), hg);
        j["host_genus"] = sys.host.genus();

        if (dot_path) {
            std::ofstream dot(*dot_path);
            if (!dot) throw ParseError(*dot_path + ": cannot open for writing");
            dot << to_dot(res.support, res.vertex_meaning, mode_name(mode));
        }
        return j;
    });
}

CommandOutcome cmd_verify(const std::string& system_path, const std::string& report_path) {
    return run_guarded("verify", [&]() {
        GraphSystem sys = load_system_file(system_path);
        std::ifstream rin(report_path);
        if (!rin) throw ParseError(report_path + ": cannot open file");
        json rep = json::parse(rin, nullptr, true, true);
        if (!rep.contains("mode") || !rep.contains("support"))
            throw ParseError(report_path + ": not a support report");
        SupportMode mode = parse_mode(rep["mode"].get<std::string>());
        if (mode == SupportMode::primal && !sys.has_coloring())
            for (VertexId v : sys.host.vertices()) sys.coloring[v] = Color::blue;

        SupportGraph cand;
        for (const auto& v : rep["support"]["vertices"]) cand.add_vertex(v.get<std::string>());
        for (const auto& e : rep["support"]["edges"])
            cand.add_edge(e[0].get<std::string>(), e[1].get<std::string>());

        Hypergraph hg = extract_hypergraph(sys, mode);
        json j;
        auto bad = first_unsupported_edge(cand, hg);
        j["mode"] = mode_name(mode);
        j["is_support"] = !bad.has_value();
        if (bad) j["failing_hyperedge"] = *bad;
        return j;
    });
}

CommandOutcome cmd_color(const std::string& path, SupportMode mode, const PipelineOptions& opt) {
    return run_guarded("color", [&]() {
        GraphSystem sys = load_for_mode(path, mode);
        SupportResult res;
        switch (mode) {
        case SupportMode::primal: res = primal_support(sys, opt); break;
        case SupportMode::dual: res = dual_support(sys, opt).first; break;
        case SupportMode::intersection: res = intersection_support(sys, opt); break;
        }
        Hypergraph hg = extract_hypergraph(sys, mode);
        ColoringResult col = support_coloring(support_as_named_graph(res), hg);
        json j;
        j["mode"] = mode_name(mode);
        j["colors_used"] = col.color_count;
        json assign;
        for (const auto& [v, c] : col.colors) assign[v] = c;
        j["coloring"] = assign;
        j["no_monochromatic"] = check_no_monochromatic(hg, col.colors);
        j["support_genus"] = res.certified_genus;
        return j;
    });
}

CommandOutcome cmd_solve(const std::string& path, ProblemKind kind, SupportMode mode, int k,
                         std::uint64_t seed) {
    return run_guarded("solve", [&]() {
        GraphSystem sys = load_for_mode(path, mode);
        ProblemInstance inst;
        inst.hg = extract_hypergraph(sys, mode);
        inst.kind = kind;
        if (kind == ProblemKind::capacitated_packing)
            for (const auto& [name, _] : inst.hg.edges) inst.capacities[name] = 1;

        LocalSearchConfig cfg;
        cfg.k = k;
        cfg.seed = seed;
        LocalSearchResult res = local_search(inst, cfg);

        json j;
        j["kind"] = [&] {
            switch (kind) {
            case ProblemKind::set_cover: return "set_cover";
            case ProblemKind::hitting_set: return "hitting_set";
            case ProblemKind::generalized_cover: return "generalized_cover";
            case ProblemKind::capacitated_packing: return "capacitated_packing";
            case ProblemKind::dominating_set: return "dominating_set";
            case ProblemKind::independent_set: return "independent_set";
            }
            return "?";
        }();
        j["k"] = k;
        j["solution"] = res.solution;
        j["objective"] = res.objective;
        j["feasible"] = res.feasible;
        j["locally_optimal"] = res.locally_optimal;
        j["certificate"] = {{"improving_moves", res.improving_moves},
                            {"final_scan_moves", res.final_scan_moves}};
        if (inst.items().size() <= 14) {
            OptimumResult opt = brute_force_optimum(inst);
            j["optimum"] = opt.value;
            if (opt.value > 0 && res.objective > 0)
                j["ratio"] = static_cast<double>(res.objective) / opt.value;
        }
        return j;
    });
}

CommandOutcome cmd_gen(int rows, int cols, int count, int k_count, std::uint64_t seed,
                       const std::string& out_path) {
    return run_guarded("gen", [&]() {
        GridSpec grid{rows, cols, GridTopology::plane};
        auto hr = random_rectangles(grid, count, seed, "R");
        auto kr = k_count > 0 ? random_rectangles(grid, k_count, seed + 1, "K") : std::vector<Region>{};

        std::ostringstream out;
        out << "version 1\n";
        out << "grid " << rows << ' ' << cols << " plane\n";
        // cells outside every H region are non-terminals
        std::set<Cell> covered;
        for (const auto& r : hr) covered.insert(r.cells.begin(), r.cells.end());
        std::vector<std::string> red;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (!covered.count({r, c})) red.push_back(grid_vertex_name({r, c}));
        if (!red.empty()) {
            out << "colors red:";
            for (const auto& n : red) out << ' ' << n;
            out << '\n';
        }
        auto dump = [&](const char* kind, const std::vector<Region>& regs) {
            for (const auto& r : regs) {
                out << "region " << kind << ' ' << r.name << ':';
                for (const Cell& c : r.cells) out << ' ' << c.row << ' ' << c.col;
                out << '\n';
            }
        };
        dump("H", hr);
        dump("K", kr);

        std::ofstream f(out_path);
        if (!f) throw ParseError(out_path + ": cannot open for writing");
        f << out.str();

        json j;
        j["path"] = out_path;
        j["h_regions"] = hr.size();
        j["k_regions"] = kr.size();
        j["seed"] = seed;
        return j;
    });
}

CommandOutcome cmd_from_grid(const std::string& path, const std::optional<std::string>& out_path) {
    return run_guarded("from-grid", [&]() {
        GraphSystem sys = load_system_file(path);
        std::string text = save_system(sys);
        json j;
        if (out_path) {
            std::ofstream f(*out_path);
            if (!f) throw ParseError(*out_path + ": cannot open for writing");
            f << text;
            j["path"] = *out_path;
        } else {
            j["system"] = text;
        }
        j["vertices"] = sys.host.vertex_count();
        j["edges"] = sys.host.edge_count();
        j["genus"] = sys.host.genus();
        return j;
    });
}

} // namespace gsup
