#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsup/embedding.hpp"

namespace gsup {

enum class Color { red, blue };

enum class FamilyScope { H, K, Both };

/// Host graph plus named families of connected induced subgraphs, each
/// stored as a vertex set.  K is the optional second family of an
/// intersection system; the coloring marks terminals (blue) and
/// non-terminals (red).
struct GraphSystem {
    EmbeddedGraph host;
    std::map<std::string, std::set<VertexId>> H;
    std::map<std::string, std::set<VertexId>> K;
    std::map<VertexId, Color> coloring;            // empty = uncolored
    std::map<VertexId, std::string> vertex_names;  // optional display names

    bool has_coloring() const { return !coloring.empty(); }
    Color color_of(VertexId v) const;
    std::string name_of(VertexId v) const;

    /// Families selected by a scope, as (name, members) pairs.
    std::vector<std::pair<std::string, const std::set<VertexId>*>> scoped(FamilyScope s) const;

    /// Host connected, every member a connected induced subgraph,
    /// coloring/vertex references resolve.  Throws StructuralError.
    void validate() const;
};

/// Map from original vertices onto the vertices of a reduced graph.
struct ReducedGraph {
    EmbeddedGraph graph;
    std::map<VertexId, VertexId> image;             // original -> reduced
    std::map<VertexId, std::vector<VertexId>> origins; // reduced -> originals
};

/// Contract every edge both of whose endpoints lie in members[a] ∩
/// members[b]; drop the loops this produces.  Parallel edges stay: the
/// crossing pattern counts edges, not neighbors.
ReducedGraph reduced_graph(const GraphSystem& sys, const std::string& a, const std::string& b,
                           FamilyScope scope = FamilyScope::H);

struct CrossingWitness {
    std::string family_a, family_b;
    VertexId at = -1;                 // shared vertex of the pair (original id)
    std::array<DartId, 4> darts{};    // darts at the reduced image, cyclic order
    std::array<VertexId, 4> reduced_neighbors{};
    /// The pair's intersection wraps a handle (reducing it lowered the
    /// genus), so the circular pattern at the merged vertex depends on the
    /// contraction order; the verdict is the canonical reduction's.
    bool essential_intersection = false;
};

/// Crossing test for one pair at one shared vertex.  Vacuously cross-free
/// when v is not shared.  Returns the witness if the two families
/// interleave around the reduced image of v.
std::optional<CrossingWitness> crossing_at(const GraphSystem& sys, const std::string& a,
                                           const std::string& b, VertexId v,
                                           FamilyScope scope = FamilyScope::H);

/// All-pairs, all-shared-vertices scan over H, and over K when present.
/// H-vs-K pairs are not checked.  Returns the first witness found.
std::optional<CrossingWitness> find_crossing(const GraphSystem& sys);
bool is_cross_free(const GraphSystem& sys);

struct PiercingWitness {
    std::string family_a, family_b;   // V(a)\V(b) is disconnected
    std::vector<std::set<VertexId>> components;
};

/// Non-piercing: for every ordered pair within H (and within K), the
/// difference induces a connected (possibly empty) subgraph of the host.
std::optional<PiercingWitness> find_piercing(const GraphSystem& sys);
bool is_non_piercing(const GraphSystem& sys);

struct DepthProfile {
    std::map<VertexId, int> vertex_depth;
    /// depth per edge, keyed by the smaller dart id of the pair
    std::map<DartId, int> edge_depth;
};

DepthProfile depth_profile(const GraphSystem& sys, FamilyScope scope = FamilyScope::H);

/// Members of the scope containing v, by name.
std::set<std::string> families_at(const GraphSystem& sys, VertexId v, FamilyScope scope);

/// Members of the scope containing both endpoints of the edge of d.
std::set<std::string> families_at_edge(const GraphSystem& sys, DartId d, FamilyScope scope);

bool is_maximal_vertex(const GraphSystem& sys, VertexId v, FamilyScope scope);

/// Maximal vertices (every incident edge strictly shallower), optionally
/// restricted to one color.
std::vector<VertexId> maximal_vertices(const GraphSystem& sys, FamilyScope scope = FamilyScope::H,
                                       std::optional<Color> restrict_to_color = std::nullopt);

bool are_twins(const GraphSystem& sys, VertexId u, VertexId v, FamilyScope scope);

/// Host-adjacent pairs with identical member sets in the scope,
/// optionally restricted to one color (both endpoints).
std::vector<std::pair<VertexId, VertexId>> adjacent_twins(
    const GraphSystem& sys, FamilyScope scope = FamilyScope::H,
    std::optional<Color> restrict_to_color = std::nullopt);

} // namespace gsup
