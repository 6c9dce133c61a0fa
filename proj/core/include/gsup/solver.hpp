#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsup/hypergraph.hpp"

namespace gsup {

enum class ProblemKind {
    set_cover,
    hitting_set,
    generalized_cover, // hitting set over an intersection hypergraph
    capacitated_packing,
    dominating_set,
    independent_set,
};

bool is_minimization(ProblemKind k);

/// A packing/covering instance over a hypergraph.  Depending on the kind,
/// the selectable items are the ground elements (hitting_set,
/// generalized_cover, capacitated_packing) or the hyperedges (set_cover,
/// dominating_set, independent_set).
struct ProblemInstance {
    Hypergraph hg;
    ProblemKind kind = ProblemKind::set_cover;
    std::map<std::string, int> capacities; // capacitated_packing only

    std::vector<std::string> items() const;
    bool feasible(const std::set<std::string>& solution) const;
};

struct LocalSearchConfig {
    int k = 1; // swap radius
    std::size_t max_iterations = 100000;
    std::uint64_t seed = 0;
};

struct LocalSearchResult {
    std::set<std::string> solution;
    int objective = 0;
    bool feasible = false;
    bool locally_optimal = false; // final full neighborhood scan found no move
    std::size_t improving_moves = 0;
    std::size_t final_scan_moves = 0; // moves examined by the certifying scan
};

/// First-improvement k-swap local search.  Minimization swaps out t <= k
/// items for fewer than t; maximization swaps in t <= k for fewer than t
/// out.  Throws ContractViolation when the instance is infeasible.
LocalSearchResult local_search(const ProblemInstance& inst, const LocalSearchConfig& cfg);

/// Independent certificate check: exhaustively confirm that no k-swap
/// improves the given feasible solution.
bool verify_local_optimality(const ProblemInstance& inst, const std::set<std::string>& solution,
                             int k);

struct OptimumResult {
    int value = 0;
    std::set<std::string> witness;
};

/// Exact optimum by subset enumeration; guarded to <= 14 items.
OptimumResult brute_force_optimum(const ProblemInstance& inst);

struct ColoringResult {
    std::map<std::string, int> colors;
    int color_count = 0;
};

/// Greedy coloring of the support along a smallest-last (degeneracy)
/// order; uses at most degeneracy+1 colors, and no hyperedge with >= 2
/// elements is monochromatic when the support is valid for hg (checked).
ColoringResult support_coloring(const SupportGraph& support, const Hypergraph& hg);

} // namespace gsup
