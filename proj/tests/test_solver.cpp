#include <doctest.h>

#include <random>

#include "common/fixtures.hpp"
#include "gsup/regions.hpp"
#include "gsup/solver.hpp"
#include "gsup/supports.hpp"
#include "gsup/verify.hpp"

using namespace gsup;

namespace {

// second, structurally different enumerator: scan by increasing (for
// minimization) or decreasing (maximization) size, combination by
// combination, and stop at the first feasible size
OptimumResult optimum_by_size(const ProblemInstance& inst) {
    auto items = inst.items();
    const int n = static_cast<int>(items.size());
    const bool minimize = is_minimization(inst.kind);
    std::vector<int> sizes;
    for (int s = 0; s <= n; ++s) sizes.push_back(minimize ? s : n - s);
    for (int s : sizes) {
        std::vector<int> pickmask(static_cast<std::size_t>(n), 0);
        std::fill(pickmask.begin(), pickmask.begin() + s, 1);
        std::sort(pickmask.begin(), pickmask.end());
        do {
            std::set<std::string> sol;
            for (int i = 0; i < n; ++i)
                if (pickmask[static_cast<std::size_t>(i)]) sol.insert(items[static_cast<std::size_t>(i)]);
            if (inst.feasible(sol)) return {static_cast<int>(sol.size()), sol};
        } while (std::next_permutation(pickmask.begin(), pickmask.end()));
    }
    throw ContractViolation("optimum_by_size: no feasible solution");
}

} // namespace

TEST_CASE("set cover collapses onto a member that covers everything") {
    ProblemInstance inst;
    inst.kind = ProblemKind::set_cover;
    inst.hg.ground = {"x1", "x2", "x3", "x4"};
    inst.hg.edges["big"] = {"x1", "x2", "x3", "x4"};
    inst.hg.edges["s1"] = {"x1"};
    inst.hg.edges["s2"] = {"x2", "x3"};
    for (int k = 1; k <= 3; ++k) {
        auto res = local_search(inst, {k, 100000, 0});
        CHECK(res.feasible);
        CHECK(res.locally_optimal);
        CHECK(res.objective == 1);
        CHECK(res.solution == std::set<std::string>{"big"});
        CHECK(verify_local_optimality(inst, res.solution, k));
    }
}

TEST_CASE("independent set on a five-cycle intersection graph") {
    ProblemInstance inst;
    inst.kind = ProblemKind::independent_set;
    for (int i = 0; i < 5; ++i) inst.hg.ground.insert("x" + std::to_string(i));
    for (int i = 0; i < 5; ++i)
        inst.hg.edges["E" + std::to_string(i)] = {"x" + std::to_string(i),
                                                  "x" + std::to_string((i + 1) % 5)};
    auto res = local_search(inst, {2, 100000, 42});
    CHECK(res.feasible);
    CHECK(res.locally_optimal);
    CHECK(res.objective == 2);
    CHECK(brute_force_optimum(inst).value == 2);
    CHECK(verify_local_optimality(inst, res.solution, 2));
}

TEST_CASE("capacitated packing with slack capacities returns everything") {
    ProblemInstance inst;
    inst.kind = ProblemKind::capacitated_packing;
    inst.hg.ground = {"H1", "H2", "H3"};
    inst.hg.edges["K1"] = {"H1", "H2"};
    inst.hg.edges["K2"] = {"H2", "H3"};
    inst.capacities = {{"K1", 5}, {"K2", 5}};
    auto res = local_search(inst, {1, 100000, 7});
    CHECK(res.objective == 3);
    CHECK(res.solution == std::set<std::string>{"H1", "H2", "H3"});
}

TEST_CASE("infeasible covering instances are rejected up front") {
    ProblemInstance inst;
    inst.kind = ProblemKind::hitting_set;
    inst.hg.ground = {"x"};
    inst.hg.edges["empty"] = {};
    CHECK_THROWS_AS(local_search(inst, {1, 1000, 0}), ContractViolation);
}

TEST_CASE("brute force: empty instance, six-vertex dual hitting set") {
    ProblemInstance empty;
    empty.kind = ProblemKind::set_cover;
    auto e = brute_force_optimum(empty);
    CHECK(e.value == 0);
    CHECK(e.witness.empty());

    auto sys = fixtures::six_vertex_system();
    ProblemInstance inst;
    inst.kind = ProblemKind::hitting_set;
    inst.hg = extract_hypergraph(sys, SupportMode::dual);
    auto opt = brute_force_optimum(inst);
    CHECK(opt.value == 2); // H3 is forced by f; d needs H1 or H2
    CHECK(opt.witness.count("H3") == 1);
}

TEST_CASE("brute force agrees with an independent enumerator on random covers") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        ProblemInstance inst;
        inst.kind = ProblemKind::set_cover;
        for (int i = 0; i < 10; ++i) inst.hg.ground.insert("g" + std::to_string(i));
        int ne = 3 + static_cast<int>(rng() % 5);
        std::set<std::string> covered;
        for (int e = 0; e < ne; ++e) {
            std::set<std::string> edge;
            for (const auto& x : inst.hg.ground)
                if (rng() % 3 == 0) edge.insert(x);
            covered.insert(edge.begin(), edge.end());
            inst.hg.edges["S" + std::to_string(e)] = edge;
        }
        if (covered.size() != inst.hg.ground.size()) continue; // infeasible draw
        auto a = brute_force_optimum(inst);
        auto b = optimum_by_size(inst);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("brute force size guard") {
    ProblemInstance inst;
    inst.kind = ProblemKind::hitting_set;
    for (int i = 0; i < 15; ++i) inst.hg.ground.insert("g" + std::to_string(i));
    CHECK_THROWS_AS(brute_force_optimum(inst), SizeGuard);
}

TEST_CASE("dominating set on a small intersection structure") {
    ProblemInstance inst;
    inst.kind = ProblemKind::dominating_set;
    inst.hg.ground = {"p", "q", "r"};
    inst.hg.edges["A"] = {"p"};
    inst.hg.edges["B"] = {"p", "q"};
    inst.hg.edges["C"] = {"q", "r"};
    inst.hg.edges["D"] = {"r"};
    auto res = local_search(inst, {2, 100000, 0});
    CHECK(res.feasible);
    CHECK(res.locally_optimal);
    auto opt = brute_force_optimum(inst);
    CHECK(opt.value <= res.objective);
    CHECK(opt.value == 2); // B dominates A; C dominates D
}

TEST_CASE("support coloring: edgeless, even cycle, grid pipeline") {
    Hypergraph singletons;
    singletons.ground = {"u", "v"};
    singletons.edges["su"] = {"u"};
    singletons.edges["sv"] = {"v"};
    SupportGraph bare;
    bare.add_vertex("u");
    bare.add_vertex("v");
    auto c1 = support_coloring(bare, singletons);
    CHECK(c1.color_count == 1);

    SupportGraph cyc;
    Hypergraph pairs;
    for (int i = 0; i < 6; ++i) {
        cyc.add_vertex("c" + std::to_string(i));
        pairs.ground.insert("c" + std::to_string(i));
    }
    for (int i = 0; i < 6; ++i) {
        std::string a = "c" + std::to_string(i), b = "c" + std::to_string((i + 1) % 6);
        cyc.add_edge(a, b);
        pairs.edges["p" + std::to_string(i)] = {a, b};
    }
    auto c2 = support_coloring(cyc, pairs);
    CHECK(c2.color_count == 2);
    CHECK(check_no_monochromatic(pairs, c2.colors));

    auto sys = random_rectangle_system({6, 6, GridTopology::plane}, 6, 2024);
    auto [res, cert] = dual_support(sys);
    SupportGraph g;
    for (const auto& [v, name] : res.vertex_meaning) g.add_vertex(name);
    for (auto [d, t] : res.support.edges())
        g.add_edge(res.vertex_meaning.at(res.support.dart_vertex(d)),
                   res.vertex_meaning.at(res.support.dart_vertex(t)));
    auto hg = extract_hypergraph(sys, SupportMode::dual);
    auto c3 = support_coloring(g, hg);
    CHECK(c3.color_count <= 6);
    CHECK(check_no_monochromatic(hg, c3.colors));
}

TEST_CASE("coloring a non-support is a contract violation") {
    Hypergraph hg;
    hg.ground = {"a", "b", "c"};
    hg.edges["e"] = {"a", "b", "c"};
    SupportGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("a", "b");
    CHECK_THROWS_AS(support_coloring(g, hg), ContractViolation);
}
