#include "gsup/solver.hpp"

#include <algorithm>
#include <random>

#include "gsup/errors.hpp"
#include "gsup/verify.hpp"

namespace gsup {

bool is_minimization(ProblemKind k) {
    switch (k) {
    case ProblemKind::set_cover:
    case ProblemKind::hitting_set:
    case ProblemKind::generalized_cover:
    case ProblemKind::dominating_set:
        return true;
    case ProblemKind::capacitated_packing:
    case ProblemKind::independent_set:
        return false;
    }
    return true;
}

std::vector<std::string> ProblemInstance::items() const {
    std::vector<std::string> out;
    switch (kind) {
    case ProblemKind::hitting_set:
    case ProblemKind::generalized_cover:
    case ProblemKind::capacitated_packing:
        out.assign(hg.ground.begin(), hg.ground.end());
        break;
    case ProblemKind::set_cover:
    case ProblemKind::dominating_set:
    case ProblemKind::independent_set:
        for (const auto& [name, _] : hg.edges) out.push_back(name);
        break;
    }
    return out;
}

bool ProblemInstance::feasible(const std::set<std::string>& sol) const {
    switch (kind) {
    case ProblemKind::set_cover: {
        std::set<std::string> covered;
        for (const auto& s : sol) {
            const auto& e = hg.edges.at(s);
            covered.insert(e.begin(), e.end());
        }
        return covered.size() == hg.ground.size();
    }
    case ProblemKind::hitting_set:
    case ProblemKind::generalized_cover: {
        for (const auto& [_, e] : hg.edges) {
            bool hit = std::any_of(e.begin(), e.end(),
                                   [&](const std::string& x) { return sol.count(x) != 0; });
            if (!hit) return false;
        }
        return true;
    }
    case ProblemKind::capacitated_packing: {
        for (const auto& [name, e] : hg.edges) {
            auto it = capacities.find(name);
            if (it == capacities.end())
                throw StructuralError("capacitated_packing: missing capacity for " + name);
            int load = 0;
            for (const auto& x : e)
                if (sol.count(x)) ++load;
            if (load > it->second) return false;
        }
        return true;
    }
    case ProblemKind::dominating_set: {
        for (const auto& [name, e] : hg.edges) {
            if (sol.count(name)) continue;
            bool dominated = false;
            for (const auto& s : sol) {
                const auto& f = hg.edges.at(s);
                if (std::any_of(e.begin(), e.end(),
                                [&](const std::string& x) { return f.count(x) != 0; })) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) return false;
        }
        return true;
    }
    case ProblemKind::independent_set: {
        std::vector<const std::set<std::string>*> chosen;
        for (const auto& s : sol) chosen.push_back(&hg.edges.at(s));
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                for (const auto& x : *chosen[i])
                    if (chosen[j]->count(x)) return false;
        return true;
    }
    }
    return false;
}

namespace {

// enumerate subsets of `pool` of exactly size t, lexicographic by index
bool next_combination(std::vector<int>& idx, int n) {
    int t = static_cast<int>(idx.size());
    for (int i = t - 1; i >= 0; --i) {
        if (idx[i] < n - (t - i)) {
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct MoveScan {
    const ProblemInstance& inst;
    const std::vector<std::string>& items;
    bool minimize;

    // first improving k-swap from `sol`, or nullopt; counts tried moves
    std::optional<std::set<std::string>> first_improvement(const std::set<std::string>& sol,
                                                           int k, std::size_t& tried) const {
        std::vector<std::string> in, out;
        for (const auto& x : items) (sol.count(x) ? in : out).push_back(x);
        // minimization: remove t, add s < t.  maximization: add t, remove s < t.
        const auto& removal_pool = minimize ? in : out;
        const auto& addition_pool = minimize ? out : in;
        const int rp = static_cast<int>(removal_pool.size());
        const int ap = static_cast<int>(addition_pool.size());
        for (int t = 1; t <= k; ++t) {
            if (t > rp) break;
            std::vector<int> ridx(t);
            for (int i = 0; i < t; ++i) ridx[i] = i;
            do {
                for (int s = 0; s < t; ++s) {
                    if (s > ap) break;
                    std::vector<int> aidx(s);
                    for (int i = 0; i < s; ++i) aidx[i] = i;
                    do {
                        ++tried;
                        std::set<std::string> cand = sol;
                        if (minimize) {
                            for (int i : ridx) cand.erase(removal_pool[i]);
                            for (int i : aidx) cand.insert(addition_pool[i]);
                        } else {
                            for (int i : ridx) cand.insert(removal_pool[i]);
                            for (int i : aidx) cand.erase(addition_pool[i]);
                        }
                        if (inst.feasible(cand)) return cand;
                    } while (next_combination(aidx, ap));
                }
            } while (next_combination(ridx, rp));
        }
        return std::nullopt;
    }
};

} // namespace

LocalSearchResult local_search(const ProblemInstance& inst, const LocalSearchConfig& cfg) {
    if (cfg.k < 1) throw StructuralError("local_search: k must be >= 1");
    if (inst.kind != ProblemKind::capacitated_packing && !inst.capacities.empty())
        throw StructuralError("local_search: capacities go with capacitated_packing only");
    auto items = inst.items();
    const bool minimize = is_minimization(inst.kind);

    std::set<std::string> sol;
    if (minimize) {
        sol.insert(items.begin(), items.end());
        if (!inst.feasible(sol))
            throw ContractViolation("local_search: instance infeasible even with all items");
    } else {
        // greedy warm start in seeded order
        std::vector<std::string> order = items;
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& x : order) {
            sol.insert(x);
            if (!inst.feasible(sol)) sol.erase(x);
        }
    }

    LocalSearchResult res;
    MoveScan scan{inst, items, minimize};
    std::size_t iterations = 0;
    for (;;) {
        if (++iterations > cfg.max_iterations) {
            res.locally_optimal = false;
            break;
        }
        std::size_t tried = 0;
        auto better = scan.first_improvement(sol, cfg.k, tried);
        if (!better) {
            res.locally_optimal = true;
            res.final_scan_moves = tried;
            break;
        }
        sol = std::move(*better);
        ++res.improving_moves;
    }
    res.solution = sol;
    res.objective = static_cast<int>(sol.size());
    res.feasible = inst.feasible(sol);
    return res;
}

bool verify_local_optimality(const ProblemInstance& inst, const std::set<std::string>& solution,
                             int k) {
    if (!inst.feasible(solution)) return false;
    auto items = inst.items();
    MoveScan scan{inst, items, is_minimization(inst.kind)};
    std::size_t tried = 0;
    return !scan.first_improvement(solution, k, tried).has_value();
}

OptimumResult brute_force_optimum(const ProblemInstance& inst) {
    auto items = inst.items();
    if (items.size() > 14) throw SizeGuard("brute_force_optimum is capped at 14 items");
    const bool minimize = is_minimization(inst.kind);
    const int n = static_cast<int>(items.size());
    std::optional<OptimumResult> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<std::string> sol;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) sol.insert(items[b]);
        if (!inst.feasible(sol)) continue;
        int val = static_cast<int>(sol.size());
        if (!best || (minimize ? val < best->value : val > best->value))
            best = OptimumResult{val, std::move(sol)};
    }
    if (!best) throw ContractViolation("brute_force_optimum: no feasible solution");
    return *best;
}

ColoringResult support_coloring(const SupportGraph& support, const Hypergraph& hg) {
    if (auto bad = first_unsupported_edge(support, hg))
        throw ContractViolation("support_coloring: candidate is not a support (hyperedge " +
                                *bad + ")");

    // smallest-last order
    std::map<std::string, int> deg;
    for (const auto& [v, nbrs] : support.adj) deg[v] = static_cast<int>(nbrs.size());
    std::vector<std::string> order;
    std::set<std::string> removed;
    while (order.size() < support.adj.size()) {
        std::string pick;
        int best = -1;
        for (const auto& [v, d] : deg) {
            if (removed.count(v)) continue;
            if (best < 0 || d < best || (d == best && v < pick)) {
                best = d;
                pick = v;
            }
        }
        order.push_back(pick);
        removed.insert(pick);
        for (const auto& w : support.adj.at(pick))
            if (!removed.count(w)) --deg[w];
    }
    std::reverse(order.begin(), order.end());

    ColoringResult res;
    for (const auto& v : order) {
        std::set<int> used;
        for (const auto& w : support.adj.at(v)) {
            auto it = res.colors.find(w);
            if (it != res.colors.end()) used.insert(it->second);
        }
        int c = 0;
        while (used.count(c)) ++c;
        res.colors[v] = c;
        res.color_count = std::max(res.color_count, c + 1);
    }

    if (auto mono = find_monochromatic(hg, res.colors))
        throw StructuralError("support_coloring: hyperedge " + *mono +
                              " came out monochromatic despite a valid support");
    return res;
}

} // namespace gsup
