#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gsup/errors.hpp"

namespace gsup {

using VertexId = std::int32_t;
using DartId = std::int32_t;

/// Dart-based combinatorial embedding of a multigraph on an oriented
/// surface.  Every edge is a pair of twin darts; each dart sits in exactly
/// one vertex rotation (the counterclockwise cyclic order of edge ends).
/// The rotation system alone determines the surface: faces are the orbits
/// of "rotation successor of the twin", and the genus follows from Euler's
/// formula.  Loops and parallel edges are representable; both arise under
/// contraction.
///
/// EmbeddedGraph is a value.  Mutating operations edit this instance;
/// callers that need the original keep a copy.
class EmbeddedGraph {
public:
    // ── construction ────────────────────────────────────────────────
    VertexId add_vertex();
    void add_vertex_with_id(VertexId v);

    /// Append an edge {u,v}; the new darts go at the end of both rotations.
    /// Returns the dart owned by u (its twin is owned by v).
    DartId add_edge(VertexId u, VertexId v);

    /// Replace the rotation at v by a permutation of the same darts.
    void set_rotation(VertexId v, std::vector<DartId> darts);

    // ── queries ─────────────────────────────────────────────────────
    bool has_vertex(VertexId v) const { return rotation_.count(v) != 0; }
    bool has_dart(DartId d) const { return darts_.count(d) != 0; }
    std::size_t vertex_count() const { return rotation_.size(); }
    std::size_t edge_count() const { return darts_.size() / 2; }
    std::vector<VertexId> vertices() const;
    const std::vector<DartId>& rotation(VertexId v) const;
    int degree(VertexId v) const;

    DartId twin(DartId d) const;
    VertexId dart_vertex(DartId d) const;           ///< owner (tail)
    VertexId dart_head(DartId d) const;             ///< far endpoint
    bool is_loop(DartId d) const;

    /// All edges as (dart, twin) with dart < twin, sorted by dart id.
    std::vector<std::pair<DartId, DartId>> edges() const;

    /// First edge between u and v in u's rotation order, if any.
    std::optional<DartId> find_edge(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  ///< deduplicated, sorted

    bool connected() const;
    /// Is the subgraph induced on `verts` connected (empty/singleton: yes)?
    bool induces_connected(const std::set<VertexId>& verts) const;

    // ── faces & genus ───────────────────────────────────────────────
    /// Decompose all darts into faces.  Every dart appears in exactly one
    /// face, exactly once.  Face-successor of d is the rotation successor
    /// of twin(d) at its vertex.
    std::vector<std::vector<DartId>> face_trace() const;

    /// Genus of the 2-cell embedding determined by the rotation system,
    /// via (2 - V + E - F)/2.  Throws StructuralError if disconnected.
    int genus() const;

    /// Sum of per-component genera; defined for disconnected graphs.
    int total_genus() const;

    // ── edits (embedding preserving) ────────────────────────────────
    /// Contract a non-loop edge: the head of d is merged into the owner of
    /// d, whose id survives.  Rotations are spliced at the removed darts,
    /// so every other dart keeps its cyclic position; parallel copies of
    /// the edge become loops and are kept.  Throws on loops.
    void contract_edge(DartId d);

    /// Subdivide the edge of d with a fresh degree-2 vertex; faces and
    /// genus are unchanged.  Returns the new vertex.
    VertexId subdivide_edge(DartId d);

    /// Remove v and connect the far endpoints of its incident edges into a
    /// cycle following v's rotation (the cycle is drawn in a small disk
    /// around v, so genus is unchanged).  The caller must have subdivided
    /// the incident edges so the far endpoints are degree-1-at-v vertices;
    /// this routine itself only requires deg(v) >= 1.  Degree 1 yields a
    /// single vertex and no cycle edge; degree 2 yields one edge, not two
    /// parallel ones.  Returns the cycle vertices in rotation order.
    std::vector<VertexId> replace_vertex_with_cycle(VertexId v);

    /// Delete all loops; genus never increases.
    void drop_loops();

    /// Delete loops and merge parallel edges, keeping the representative
    /// pair that comes first in rotation order at the smaller endpoint.
    void simplify();

    /// Delete a single edge (both darts).
    void remove_edge(DartId d);

    /// Remove an isolated (degree-0) vertex.
    void remove_isolated_vertex(VertexId v);

    /// Internal consistency: twins pair up, every dart owned once.
    void check_valid() const;

    bool operator==(const EmbeddedGraph&) const = default;

private:
    struct DartRec {
        DartId twin = -1;
        VertexId owner = -1;
        friend bool operator==(const DartRec&, const DartRec&) = default;
    };

    DartId new_dart(VertexId owner);
    std::size_t rotation_index(VertexId v, DartId d) const;

    std::map<VertexId, std::vector<DartId>> rotation_;
    std::map<DartId, DartRec> darts_;
    VertexId next_vertex_ = 0;
    DartId next_dart_ = 0;
};

// Pure convenience wrappers: copy, edit, return.
EmbeddedGraph contracted(const EmbeddedGraph& g, DartId d);
std::pair<EmbeddedGraph, VertexId> subdivided(const EmbeddedGraph& g, DartId d);
EmbeddedGraph simplified(const EmbeddedGraph& g);

/// Path/cycle/grid-free builder helper: graph from an explicit rotation
/// table given as neighbor lists (simple graphs only).  Each directed
/// mention (u -> v) must be matched by (v -> u).
EmbeddedGraph from_rotation_table(
    const std::map<VertexId, std::vector<VertexId>>& neighbor_rotations);

/// Same vertices, same darts, and each rotation equal up to the cyclic
/// anchor.  operator== compares anchored sequences; this is the
/// rotation-invariant comparison.
bool rotation_equivalent(const EmbeddedGraph& a, const EmbeddedGraph& b);

} // namespace gsup
