#pragma once

#include <optional>
#include <string>

#include "gsup/graph_system.hpp"
#include "gsup/hypergraph.hpp"

namespace gsup {

enum class SupportMode { primal, dual, intersection };

/// Hypergraph extraction.  primal: one hyperedge per H-member, holding its
/// blue terminals (coloring required).  dual: one hyperedge per host
/// vertex, holding the members containing it.  intersection: one hyperedge
/// per K-member, holding the H-members it shares a vertex with (K
/// required).
Hypergraph extract_hypergraph(const GraphSystem& sys, SupportMode mode);

/// First hyperedge whose induced subgraph of `candidate` is disconnected;
/// nullopt means `candidate` is a support.  Empty and singleton hyperedges
/// pass vacuously.  Throws StructuralError when a hyperedge mentions a
/// vertex the candidate lacks.
std::optional<std::string> first_unsupported_edge(const SupportGraph& candidate,
                                                  const Hypergraph& hg);
bool is_support(const SupportGraph& candidate, const Hypergraph& hg);

/// Weak support: each hyperedge with >= 2 elements induces at least one
/// edge.
bool is_weak_support(const SupportGraph& candidate, const Hypergraph& hg);

/// Weak bipartite support: each hyperedge containing both colors induces
/// an edge between the colors.
bool is_weak_bipartite_support(const SupportGraph& candidate, const Hypergraph& hg,
                               const std::map<std::string, Color>& coloring);

/// First hyperedge of size >= 2 whose elements all share one color;
/// nullopt when none.  Throws on uncolored elements.
std::optional<std::string> find_monochromatic(const Hypergraph& hg,
                                              const std::map<std::string, int>& coloring);
bool check_no_monochromatic(const Hypergraph& hg, const std::map<std::string, int>& coloring);

/// Exhaustive oracle: does any graph on the ground set support hg with
/// (minimum) genus at most genus_budget?  Candidate edges are pairs that
/// co-occur in a hyperedge; minimum genus is found by enumerating rotation
/// systems.  Guarded to tiny instances (<= 8 ground elements).
bool brute_force_support_exists(const Hypergraph& hg, int genus_budget);

/// Minimum genus over all rotation systems of a simple connected graph
/// (enumeration; guarded).  Disconnected input: sum over components.
int brute_force_min_genus(const SupportGraph& g);

} // namespace gsup
